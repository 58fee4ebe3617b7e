"""slcert: exact certificates for surface-group representations into PSL(2,R).

Builds the explicit glued representation family whose side-B punctured torus
is upper triangular (hence the family is non-injective) and whose side-A
complement is Fuchsian with matching parabolic boundary, then certifies in
exact arithmetic over Q[t] that no power of a simple closed curve lies in
the kernel and that the family contains uncountably many pairwise
non-conjugate members.
"""

from .exact import Mat2, Poly, Rational, projective_eq
from .rep import (
    ParamError,
    Params,
    Representation,
    SURFACE_GENUS2,
    SURFACE_PUNCTURED_TORUS,
    build_phi_A,
    build_phi_B,
    build_representation,
    evaluate,
    freeness_probe,
    lambda_t,
    validate_params,
)
from .words import cyclic_reduce, format_word, free_reduce, parse_word
from .scc import (
    SccClass,
    classify_B_word,
    christoffel_word,
    enumerate_scc_classes,
    type3_trace,
    whitehead_is_primitive,
)
from .certify import (
    Certificate,
    Report,
    certify_word,
    kernel_witness,
    nonconjugacy_witness,
    order_certificate,
    run_theorem_suite,
    verify_lemma_degrees,
)

__all__ = [
    "Mat2",
    "Poly",
    "Rational",
    "projective_eq",
    "ParamError",
    "Params",
    "Representation",
    "SURFACE_GENUS2",
    "SURFACE_PUNCTURED_TORUS",
    "build_phi_A",
    "build_phi_B",
    "build_representation",
    "evaluate",
    "freeness_probe",
    "lambda_t",
    "validate_params",
    "cyclic_reduce",
    "free_reduce",
    "parse_word",
    "format_word",
    "SccClass",
    "classify_B_word",
    "christoffel_word",
    "enumerate_scc_classes",
    "type3_trace",
    "whitehead_is_primitive",
    "Certificate",
    "Report",
    "certify_word",
    "kernel_witness",
    "nonconjugacy_witness",
    "order_certificate",
    "run_theorem_suite",
    "verify_lemma_degrees",
]

__version__ = "0.1.0"
