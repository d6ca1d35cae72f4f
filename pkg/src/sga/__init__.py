"""Exact combinatorics and finite-field representation calculus for
skewed-gentle algebras: strings, bands, admissible words, hom-graphs,
kisses, E-invariants, g-vectors, and tau-reduced component labels."""

from .quiver import (Arrow, Fringing, GabrielPresentation, PolarizedQuiver,
                     auto_fringe, check_fringing, gabriel_presentation,
                     hat_quiver, validate)
from .words import (Letter, Word, enumerate_bands, enumerate_strings_at,
                    format_word, lex_compare, successor, tau_string)
from .admissible import (AdmWord, a_of_w, classify, completion, enumerate_adm,
                         is_admissible, tau_adm)
from .homgraph import (HomGraph, Winding, build_H, build_HQ,
                       classify_components, kiss_transport,
                       real_long_bijection, triples)
from .repmod import (AxModule, E_oracle, Rep, build_module, g_oracle,
                     hom_basis_oracle, hom_basis_structured, hom_dim_formula,
                     hom_dim_oracle, indecomposables_Ax, iso_witness,
                     tau_module)
from .invariants import (e_comb, enumerate_components, g_comb, is_tau_generic,
                         kiss_census, simplified_check, tags_for)

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
