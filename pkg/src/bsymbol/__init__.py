"""Exact b-symbol weight distributions of MDS codes, with a brute-force oracle."""

from .bsymbol_metric import (
    ReadVector,
    ShapeDecomposition,
    b_distance,
    b_weight,
    read_vector,
    shape_decompose,
    weight_from_shape,
)
from .counting import binom, compositions, n_b, n_infty
from .gf import FieldElement, FieldSpec, arith, enumerate_elements, field_of_order, make_field
from .linear_code import (
    CodeParams,
    Codeword,
    CoordinateSet,
    LinearCode,
    encode,
    enumerate_codewords,
    min_distance_bruteforce,
    rs_code,
    shorten,
)
from .mds_distribution import (
    FProfile,
    b_distribution,
    corollary_check,
    f_count,
    f_weight,
    hamming_count,
    hamming_distribution,
)
from .oracle import brute_compositions, brute_distribution, brute_F
from .weights import DistributionQuery, WeightDistribution

__version__ = "0.1.0"
