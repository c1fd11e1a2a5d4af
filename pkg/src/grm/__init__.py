"""Second weights of generalized Reed-Muller codes, with brute-force oracles."""
from .arrange import (Arrangement, ArrangementType, apply_exchange, best_nonmaximal_type,
                      is_maximal_type, n_points_grid, n_points_type)
from .ffield import FieldSpec, field_arith, make_field
from .groebner import (buchberger, divide, footprint_size, grlex_less, is_groebner,
                       rational_points, s_polynomial, weight_lower_bound)
from .grmcode import (GrmParams, SecondWeightResult, dimension_oracle, grm_params,
                      maximal_config_poly, second_weight)
from .lemma import (LemmaInstance, brute_force_min, check_minimizer_structure,
                    closed_form_mu, objective)
from .mpoly import (MultiPoly, count_points, evaluate, leading_monomial, parse_poly,
                    reduce_poly)

__version__ = "0.1.0"
