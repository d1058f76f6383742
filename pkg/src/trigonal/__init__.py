"""Trigonal curves on Hirzebruch surfaces, their normal forms and the strata they classify.

The package is organised bottom-up:

* :mod:`trigonal.algebra` -- exact rationals, polynomials, resultants,
  Groebner bases in two variables, Smith normal form;
* :mod:`trigonal.curves` -- the coefficient space V^k, regularity, L0 profile,
  stratum classification;
* :mod:`trigonal.group_action` -- the substitution group and its torus;
* :mod:`trigonal.normal_forms` -- elementary transformations and the three
  normalization pipelines with residual equivalence tests;
* :mod:`trigonal.presentations` -- group presentations and the section map;
* :mod:`trigonal.cli` -- the ``trigonal`` command.
"""

from .curves import (
    L0Profile,
    Stratum,
    StratumKind,
    TrigonalForm,
    chart_at_infinity,
    classify,
    dims,
    form_from_terms,
    is_regular,
    l0_profile,
    make_form,
    scroll_point,
    scroll_rank_ok,
)
from .group_action import GElement, TorusElement, act, act_torus, compose, torus_translate
from .normal_forms import (
    SliceTag,
    TransformLog,
    TransformStep,
    normalize,
    normalize_one_point,
    normalize_three_point,
    normalize_two_point,
    orbit_equal,
    residual_equiv_one_point,
    residual_equiv_three_point,
)
from .presentations import (
    Presentation,
    abelianization,
    build_conjecture_4k2k,
    build_piK,
    central_word,
    cusp_discriminant_ok,
    section_embedding,
)

__version__ = "0.1.0"
