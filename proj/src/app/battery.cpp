// Copyright 2026 The oskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The acceptance battery run by `rp suite`.
#include "app/scenario.hpp"

namespace oskit::app {
namespace {

constexpr const char* kBattery = R"json([
  {"name": "exp-line-0.1", "module": "kernel-lab", "check": "gram_psd",
   "payload": {"kernel": {"family": "EXP_LINE", "params": {"lambda": 0.1}},
               "uniform": {"lo": -10, "hi": 10, "count": 64}}},
  {"name": "exp-line-1", "module": "kernel-lab", "check": "gram_psd",
   "payload": {"kernel": {"family": "EXP_LINE", "params": {"lambda": 1}},
               "uniform": {"lo": -10, "hi": 10, "count": 64}}},
  {"name": "exp-line-10", "module": "kernel-lab", "check": "gram_psd",
   "payload": {"kernel": {"family": "EXP_LINE", "params": {"lambda": 10}},
               "uniform": {"lo": -10, "hi": 10, "count": 64}}},
  {"name": "exp-line-reflected-0.1", "module": "kernel-lab", "check": "reflected_gram",
   "payload": {"kernel": {"family": "EXP_LINE", "params": {"lambda": 0.1}}, "geometry": "LINE",
               "uniform": {"lo": 0.3125, "hi": 10, "count": 32}, "rank_one": true}},
  {"name": "exp-line-reflected-1", "module": "kernel-lab", "check": "reflected_gram",
   "payload": {"kernel": {"family": "EXP_LINE", "params": {"lambda": 1}}, "geometry": "LINE",
               "uniform": {"lo": 0.3125, "hi": 10, "count": 32}, "rank_one": true}},
  {"name": "exp-line-reflected-10", "module": "kernel-lab", "check": "reflected_gram",
   "payload": {"kernel": {"family": "EXP_LINE", "params": {"lambda": 10}}, "geometry": "LINE",
               "uniform": {"lo": 0.3125, "hi": 10, "count": 32}, "rank_one": true}},

  {"name": "periodic-0.5-0.5", "module": "kernel-lab", "check": "periodic_fourier", "payload": {"lambda": 0.5, "beta": 0.5}},
  {"name": "periodic-0.5-1", "module": "kernel-lab", "check": "periodic_fourier", "payload": {"lambda": 0.5, "beta": 1}},
  {"name": "periodic-0.5-4", "module": "kernel-lab", "check": "periodic_fourier", "payload": {"lambda": 0.5, "beta": 4}},
  {"name": "periodic-1-0.5", "module": "kernel-lab", "check": "periodic_fourier", "payload": {"lambda": 1, "beta": 0.5}},
  {"name": "periodic-1-1", "module": "kernel-lab", "check": "periodic_fourier", "payload": {"lambda": 1, "beta": 1}},
  {"name": "periodic-1-4", "module": "kernel-lab", "check": "periodic_fourier", "payload": {"lambda": 1, "beta": 4}},
  {"name": "periodic-4-0.5", "module": "kernel-lab", "check": "periodic_fourier", "payload": {"lambda": 4, "beta": 0.5}},
  {"name": "periodic-4-1", "module": "kernel-lab", "check": "periodic_fourier", "payload": {"lambda": 4, "beta": 1}},
  {"name": "periodic-4-4", "module": "kernel-lab", "check": "periodic_fourier", "payload": {"lambda": 4, "beta": 4}},

  {"name": "interval-atom", "module": "kernel-lab", "check": "interval_rp",
   "payload": {"measure": {"atoms": [{"loc": 1.0, "weight": 1.0}]}, "a": 2.0}},
  {"name": "interval-periodic-pair", "module": "kernel-lab", "check": "interval_rp",
   "payload": {"measure": {"support": "real",
                           "atoms": [{"loc": 1.0, "weight": 1.0}, {"loc": -1.0, "weight": 0.1353352832366127}]},
               "a": 1.0}},
  {"name": "interval-negative-atom", "module": "kernel-lab", "check": "interval_rp",
   "expect": {"group": "NOT_PSD", "semigroup": "PSD"},
   "payload": {"measure": {"support": "real", "atoms": [{"loc": -1.0, "weight": 1.0}]}, "a": 2.0}},

  {"name": "reflection-positive-basic", "module": "rphs-core", "check": "reflection_positive",
   "payload": {"theta": [[1, 0], [0, -1]], "plus_basis": [[1], [0.5]], "expected_min_eig": 0.75}},
  {"name": "reflection-positive-negative", "module": "rphs-core", "check": "reflection_positive",
   "expect_not_psd": true, "payload": {"theta": [[1, 0], [0, -1]], "plus_basis": [[1], [2]]}},
  {"name": "graph-contraction", "module": "rphs-core", "check": "graph_contraction",
   "payload": {"p": 2, "q": 3, "singular_values": [1.0, 0.4], "seed": 4}},
  {"name": "graph-expansion", "module": "rphs-core", "check": "graph_contraction",
   "payload": {"p": 2, "q": 3, "singular_values": [1.3, 0.2], "seed": 5}},
  {"name": "os-transform-bound", "module": "rphs-core", "check": "os_transform_bound",
   "payload": {"trials": 200, "unitary_trials": 50, "seed": 7}},
  {"name": "markov-equivalence", "module": "rphs-core", "check": "markov_equivalence",
   "payload": {"trials": 100, "seed": 11}, "tolerances": {"markov": 1e-9}},

  {"name": "rp-function", "module": "dilation", "check": "rp_function",
   "payload": {"measure": {"atoms": [{"loc": 0.0, "weight": 0.2}, {"loc": 0.5, "weight": 1.0}, {"loc": 3.0, "weight": 0.4}]},
               "random_times": {"count": 24, "hi": 4.0, "seed": 3}}},
  {"name": "dilation-pairing", "module": "dilation", "check": "pairing",
   "payload": {"eigs": [0.3, 2, 7], "xi": [1, [0, 1], 0.5], "eta": [[0.2, -1], 1, 2], "times": [0, 0.5, 1.7, 4]}},
  {"name": "hardy-residue", "module": "dilation", "check": "hardy",
   "payload": {"eigs": [0.3, 2, 7], "xi": [1, [0.5, -0.5], 2],
               "points": [[0.5, 0], [1, 1], [2, -3], [0.2, 0.7], [4, 0.5]]}},
  {"name": "fixed-point-reduction", "module": "dilation", "check": "projection",
   "payload": {"measure": {"atoms": [{"loc": 0.0, "weight": 0.3}, {"loc": 2.0, "weight": 0.7}]},
               "horizon": 1000, "expected_limit": 0.3}},

  {"name": "kms-random-1", "module": "kms", "check": "kms_condition",
   "payload": {"beta": 1.0, "random": {"seed": 1, "atoms": 3, "block": 2}, "samples": 32, "seed": 21}},
  {"name": "kms-random-2", "module": "kms", "check": "kms_condition",
   "payload": {"beta": 2.5, "random": {"seed": 2, "atoms": 3, "block": 1}, "samples": 32, "seed": 22}},
  {"name": "kms-random-3", "module": "kms", "check": "kms_condition",
   "payload": {"beta": 0.7, "random": {"seed": 3, "atoms": 3, "block": 3}, "samples": 32, "seed": 23}},
  {"name": "extension-0.2", "module": "kms", "check": "extension",
   "payload": {"beta": 1.0, "modulus": 0.2, "pairs": 2, "grid": 16}},
  {"name": "extension-0.5", "module": "kms", "check": "extension",
   "payload": {"beta": 1.0, "modulus": 0.5, "pairs": 2, "grid": 16}},
  {"name": "extension-0.8", "module": "kms", "check": "extension",
   "payload": {"beta": 1.0, "modulus": 0.8, "pairs": 2, "grid": 16}},
  {"name": "extension-flipped", "module": "kms", "check": "extension",
   "payload": {"beta": 1.0, "modulus": 0.5, "pairs": 2, "grid": 16, "flip_odd": true}},
  {"name": "matsubara", "module": "kms", "check": "matsubara",
   "payload": {"lambda": 1.0, "beta": 2.0, "n_max": 32}},
  {"name": "standard-subspace", "module": "kms", "check": "standard_subspace",
   "payload": {"delta": [0.5, 2.0, 0.25, 4.0, 1.0], "pairing": [1, 0, 3, 2, 4]}},

  {"name": "hyp2f1-generic", "module": "sphere", "check": "hyp2f1_paths",
   "payload": {"a": 0.3, "b": 1.7, "c": 2.2}},
  {"name": "hyp2f1-psi-2-0.5", "module": "sphere", "check": "hyp2f1_paths", "payload": {"mass": 0.5, "n": 2}},
  {"name": "hyp2f1-psi-2-2", "module": "sphere", "check": "hyp2f1_paths", "payload": {"mass": 2.0, "n": 2}},
  {"name": "hyp2f1-psi-3-1", "module": "sphere", "check": "hyp2f1_paths", "payload": {"mass": 1.0, "n": 3}},
  {"name": "r-window-3-0.9", "module": "sphere", "check": "r_window", "payload": {"n": 3, "lambda": 0.9}},
  {"name": "r-window-2-0.95", "module": "sphere", "check": "r_window", "payload": {"n": 2, "lambda": 0.95}},
  {"name": "r-window-4-0.6", "module": "sphere", "check": "r_window", "payload": {"n": 4, "lambda": 0.6}},
  {"name": "r-window-3-1.3", "module": "sphere", "check": "r_window", "expect_not_psd": true,
   "payload": {"n": 3, "lambda": 1.3}},
  {"name": "r-window-4-1.4", "module": "sphere", "check": "r_window", "expect_not_psd": true,
   "payload": {"n": 4, "lambda": 1.4}},
  {"name": "psi-2-0.5", "module": "sphere", "check": "psi_gram", "payload": {"n": 2, "mass": 0.5}},
  {"name": "psi-2-2", "module": "sphere", "check": "psi_gram", "payload": {"n": 2, "mass": 2.0}},
  {"name": "psi-3-1", "module": "sphere", "check": "psi_gram", "payload": {"n": 3, "mass": 1.0}},
  {"name": "constants-2-0.3", "module": "sphere", "check": "constants", "payload": {"n": 2, "lambda": 0.3}},
  {"name": "constants-2-0.7", "module": "sphere", "check": "constants", "payload": {"n": 2, "lambda": 0.7}},
  {"name": "constants-3-0.3", "module": "sphere", "check": "constants", "payload": {"n": 3, "lambda": 0.3}},
  {"name": "constants-3-0.7", "module": "sphere", "check": "constants", "payload": {"n": 3, "lambda": 0.7}},
  {"name": "conformal-3", "module": "sphere", "check": "conformal", "payload": {"n": 3, "trials": 100}},
  {"name": "stereographic-3", "module": "sphere", "check": "stereographic", "payload": {"n": 3}},

  {"name": "theta-t-single", "module": "freefield", "check": "theta_t",
   "payload": {"measure": {"kind": "atomic", "atoms": [{"m": 1}]}, "times": [0.5, 1, 2], "pbar": [0, 0.7]}},
  {"name": "theta-t-pair", "module": "freefield", "check": "theta_t",
   "payload": {"measure": {"kind": "atomic", "atoms": [{"m": 1}, {"m": 2}]}, "times": [0.5, 1, 2], "pbar": [0, 0.7]}},
  {"name": "ode-d1", "module": "freefield", "check": "ode",
   "payload": {"mass": 1.0, "points": [-2, -0.5, 0.5, 1, 2, 3]}},
  {"name": "halfspace-d1-single", "module": "freefield", "check": "halfspace",
   "payload": {"d": 1, "measure": {"kind": "atomic", "atoms": [{"m": 1}]},
               "random": {"count": 20, "lo": 0.05, "hi": 4, "seed": 1}}},
  {"name": "halfspace-d1-pair", "module": "freefield", "check": "halfspace",
   "payload": {"d": 1, "measure": {"kind": "atomic", "atoms": [{"m": 1}, {"m": 2}]},
               "random": {"count": 20, "lo": 0.05, "hi": 4, "seed": 2}}},
  {"name": "halfspace-d3-single", "module": "freefield", "check": "halfspace",
   "payload": {"d": 3, "measure": {"kind": "atomic", "atoms": [{"m": 1}]},
               "random": {"count": 20, "lo": -3, "hi": 3, "lo0": 0.05, "hi0": 3, "seed": 3}}},
  {"name": "halfspace-d3-pair", "module": "freefield", "check": "halfspace",
   "payload": {"d": 3, "measure": {"kind": "atomic", "atoms": [{"m": 1}, {"m": 2}]},
               "random": {"count": 20, "lo": -3, "hi": 3, "lo0": 0.05, "hi0": 3, "seed": 4}}},
  {"name": "power-slopes-0.5", "module": "freefield", "check": "power_slopes", "payload": {"s": 0.5}},
  {"name": "power-slopes-1", "module": "freefield", "check": "power_slopes", "payload": {"s": 1.0}},
  {"name": "power-slopes-1.5", "module": "freefield", "check": "power_slopes", "payload": {"s": 1.5}},
  {"name": "multiplicative-single", "module": "freefield", "check": "multiplicativity",
   "payload": {"measure": {"kind": "atomic", "atoms": [{"m": 1.5}]}}},
  {"name": "multiplicative-pair", "module": "freefield", "check": "multiplicativity",
   "expect_multiplicative": false,
   "payload": {"measure": {"kind": "atomic", "atoms": [{"m": 1}, {"m": 2}]}}},

  {"name": "ou-markov", "module": "ospaths", "check": "markov_split",
   "payload": {"process": "ou", "lambda": 1.0, "times": [0, 0.4, 1.1, 1.5, 2.7, 3.0], "present": 2}},
  {"name": "sqexp-not-markov", "module": "ospaths", "check": "markov_split",
   "payload": {"process": "sqexp", "lambda": 1.0, "times": [0, 1, 2], "present": 1}},
  {"name": "ou-sampling", "module": "ospaths", "check": "gaussian_mc", "stochastic": true,
   "payload": {"process": "ou", "lambda": 1.0, "times": [0, 0.5, 1, 2], "paths": 100000, "seed": 42}},
  {"name": "heat-semigroup", "module": "ospaths", "check": "heat", "stochastic": true,
   "payload": {"t1": 0.3, "t2": 0.7, "seed": 21}},
  {"name": "feynman-kac-indicator", "module": "ospaths", "check": "feynman_kac", "stochastic": true,
   "payload": {"function": "indicator", "t": 1, "x": 0, "samples": 100000, "seed": 7}},
  {"name": "feynman-kac-identity", "module": "ospaths", "check": "feynman_kac", "stochastic": true,
   "payload": {"function": "identity", "t": 2, "x": 0.7, "samples": 100000, "seed": 8}},
  {"name": "feynman-kac-gaussian", "module": "ospaths", "check": "feynman_kac", "stochastic": true,
   "payload": {"function": "gaussian", "t": 0.5, "x": 0.5, "samples": 100000, "seed": 9}},
  {"name": "mehler", "module": "ospaths", "check": "mehler", "payload": {"t": 0.5, "s": 0.3}},
  {"name": "pss-two-state", "module": "ospaths", "check": "pss", "stochastic": true,
   "payload": {"transition": [[0.7, 0.3], [0.3, 0.7]], "powers": [1, 2, 3], "trials": 500, "seed": 31}},
  {"name": "pss-birth-death", "module": "ospaths", "check": "pss", "stochastic": true,
   "payload": {"transition": [[0.5, 0.5, 0], [0.25, 0.5, 0.25], [0, 0.5, 0.5]], "powers": [1, 2, 5],
               "trials": 500, "seed": 32}}
])json";

}  // namespace

const std::vector<json>& battery() {
  static const std::vector<json> list = [] {
    std::vector<json> out;
    for (auto& s : json::parse(kBattery)) out.push_back(std::move(s));
    return out;
  }();
  return list;
}

}  // namespace oskit::app
