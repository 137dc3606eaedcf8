from .homology import CoverHomology, cover_homology
from .linking import (LinkingForm, linking_form, Character,
                      linking_characters, cg_signature_residue)
from .decks import deck_eigenspaces, deck_matrix_mod_q, DeckEigenspaces
from .metabolise import metabolisers, odd_vector_search, OddVectorResult

__all__ = [
    "CoverHomology", "cover_homology", "LinkingForm", "linking_form",
    "Character", "linking_characters", "cg_signature_residue",
    "deck_eigenspaces", "deck_matrix_mod_q", "DeckEigenspaces",
    "metabolisers", "odd_vector_search", "OddVectorResult",
]
