"""Exact sparse multivariate polynomials, symmetric decomposition and Niven-style checks."""

from .errors import (
    ArityError,
    CertificateError,
    IntegralityError,
    InternalProgressError,
    InvalidInputError,
    NivenPolyError,
    NotSymmetricError,
    ParseError,
    QuadratureError,
    ZeroLeadError,
    ZeroPolyError,
)
from .monomial import Monomial, madd, mdeg, mnmc_le, mweight, mzero
from .mpoly import (
    MPoly,
    Permutation,
    coeff,
    is_integer_poly,
    is_symmetric,
    mcompose,
    mderiv,
    meval,
    mlead,
    msize,
    msupp,
    msym,
)
from .niven import (
    NivenReport,
    SkeletonInput,
    build_Fp,
    build_Gp,
    build_T,
    check_Epd_structure,
    check_lemma3,
    e_case,
    find_p,
    pi_coeff_values,
    pi_construct,
    quadrature_check_lemma2,
)
from .parser import parse_poly
from .symfund import Decomposition, check_msym_comp, mesym, symf, symf1, vieta
from .upoly import UPoly, mroot_mult, nderivn, sd, uderive, uderive_n, ueval

__version__ = "0.1.0"
