"""Linking-number invariants of virtual knots given as signed Gauss codes."""
from .codec import (Chord, GaussCode, GaussCodeError, GaussCodeSyntaxError,
                    GaussCodeValidationError, InterlacementGraph, Parity, Passage, Role,
                    UnknownLabelError, chord_parity, chords, interlaced, interlacement_graph,
                    parse_gauss_code, render_gauss_code)
from .invariants import (evaluate_at_one, gamma, gamma2_bar, gamma2_oracle, gamma_bar,
                         gamma_oracle, opposite_parity_pairs, varsigma, writhe)
from .polynomial import IntPolynomial, Mod2Polynomial
from .surgery import (LinkDiagram, SmoothingResult, component_count, knot_from_pair_smoothing,
                      linking_mod2, linking_number, smooth, switch_crossing)

__version__ = "0.1.0"
