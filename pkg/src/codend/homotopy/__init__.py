"""Graded homotopy structures: A-infinity and Dend-infinity coalgebras, Rota-Baxter
operators on them, and the free diassociative algebra picture."""

from .ainf import (
    TRUNCATED,
    AInfCoalgebra,
    IdentityReport,
    RBOInf,
    ainf_identity,
    check_ainf,
    check_rbo_inf,
    from_coalgebra,
    rbo_inf_defect,
)
from .dendinf import (
    DendInfCoalgebra,
    check_dendinf,
    check_dendinf1,
    dendinf_identity,
    from_dendriform,
    induce_dendinf,
    shift_from_dendinf1,
    shift_to_dendinf1,
    split,
)
from .diass import Diass, DSquaredReport, TruncationOverflow, check_D_squared
from .graded import DegreeError, GradedMap, GradedSpace, pad_graded, random_graded_map, word_degree

__all__ = [
    "TRUNCATED",
    "AInfCoalgebra",
    "DSquaredReport",
    "DegreeError",
    "DendInfCoalgebra",
    "Diass",
    "GradedMap",
    "GradedSpace",
    "IdentityReport",
    "RBOInf",
    "TruncationOverflow",
    "ainf_identity",
    "check_D_squared",
    "check_ainf",
    "check_dendinf",
    "check_dendinf1",
    "check_rbo_inf",
    "dendinf_identity",
    "from_coalgebra",
    "from_dendriform",
    "induce_dendinf",
    "pad_graded",
    "random_graded_map",
    "rbo_inf_defect",
    "shift_from_dendinf1",
    "shift_to_dendinf1",
    "split",
    "word_degree",
]
