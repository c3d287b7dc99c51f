"""Exact computations with graded Hecke algebras, their modules and graded Lie data."""

from .exact.scalar import Scalar, as_scalar, format_scalar, parse_scalar
from .exact.poly import Poly, demazure
from .exact.matrix import ExactMatrix
from .roots import (BasedRootDatum, ExtendedWeylGroup, ParameterFunction, build_root_datum,
                    det_character, enumerate_group, is_positive_position)
from .hecke import AlgebraElement, GradedHeckeAlgebraSpec, normalize_equal_parameters, sgn_map
from .module import (FiniteModule, ModuleError, central_evaluate, character_module, det_multiplicity,
                     induce, induce_character, induce_parabolic, sgn_pullback,
                     weights_and_central_character)
from .structure import composition_factors, hom_dim, hom_space, socle, socle_and_factors
from .langlands import LanglandsDatum, langlands_standard, standard_modules, temperedness_class
from .geometry import (NilpotentElement, RankInvariant, SemisimpleElement, boundedness_class,
                       closure_leq, graded_space, is_distinguished, is_open, jm_triple,
                       lemma112_criterion, open_orbit_rep, rank_invariants)
from .bridge import (AdditiveParameter, AffineReductionInput, MultiplicativeParameter, expu_transfer,
                     mult_is_open, reduce_affine, steinberg_char, to_multiplicative)
from .blocks import BlockReport, block_report

__all__ = ["Scalar", "as_scalar", "format_scalar", "parse_scalar", "Poly", "demazure",
           "ExactMatrix", "BasedRootDatum", "ExtendedWeylGroup", "ParameterFunction",
           "build_root_datum", "det_character", "enumerate_group", "is_positive_position",
           "AlgebraElement", "GradedHeckeAlgebraSpec", "normalize_equal_parameters", "sgn_map",
           "FiniteModule", "ModuleError", "central_evaluate", "character_module",
           "det_multiplicity", "induce", "induce_character", "induce_parabolic", "sgn_pullback",
           "weights_and_central_character", "composition_factors", "hom_dim", "hom_space",
           "socle", "socle_and_factors", "LanglandsDatum", "langlands_standard",
           "standard_modules", "temperedness_class", "NilpotentElement", "RankInvariant",
           "SemisimpleElement", "boundedness_class", "closure_leq", "graded_space",
           "is_distinguished", "is_open", "jm_triple", "lemma112_criterion", "open_orbit_rep",
           "rank_invariants", "AdditiveParameter", "AffineReductionInput",
           "MultiplicativeParameter", "expu_transfer", "mult_is_open", "reduce_affine",
           "steinberg_char", "to_multiplicative", "BlockReport", "block_report"]

__version__ = "0.1.0"
