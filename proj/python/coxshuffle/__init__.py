"""Exact face semigroups, shuffle algebras and random walks on Coxeter complexes and buildings."""

from ._coxshuffle import (
    Element,
    Face,
    ScaleLimit,
    building_face_count,
    eigenvalues,
    enumerate_faces,
    idempotents,
    map_face,
    push_element,
    q_number,
    q_stirling,
    qshuffle,
    shuffle,
    sigma,
    signed_stirling,
    simulate,
    spectrum,
    stirling2,
    transition_matrix,
    verify,
    verify_homomorphism,
)

__all__ = [
    "Element",
    "Face",
    "ScaleLimit",
    "building_face_count",
    "eigenvalues",
    "enumerate_faces",
    "idempotents",
    "map_face",
    "push_element",
    "q_number",
    "q_stirling",
    "qshuffle",
    "shuffle",
    "sigma",
    "signed_stirling",
    "simulate",
    "spectrum",
    "stirling2",
    "transition_matrix",
    "verify",
    "verify_homomorphism",
]
