# Copyright 2026 The brokergraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brokered graph-state growth: stabilizer engine, protocol and timing model."""

from ._core import (
    BrokerNetwork,
    BuildPlan,
    Graph,
    ParallelMode,
    PauliString,
    RetryCapExceeded,
    Strategy,
    Tableau,
    TimingProfile,
    check_plan,
    choose_strategy,
    compare_strategies,
    exact_parallel_pair_rounds,
    expected_time_sequential,
    expected_time_star,
    extract_graph,
    graph_stabilizers,
    groups_equal,
    lc_equivalent,
    local_complement,
    parse_edge_list,
    plan_growth,
    preset,
    preset_names,
    run_monte_carlo,
    run_trial,
    sweep_csv,
    threshold_ratio,
    validate,
)

__all__ = [
    "BrokerNetwork",
    "BuildPlan",
    "Graph",
    "ParallelMode",
    "PauliString",
    "RetryCapExceeded",
    "Strategy",
    "Tableau",
    "TimingProfile",
    "check_plan",
    "choose_strategy",
    "compare_strategies",
    "exact_parallel_pair_rounds",
    "expected_time_sequential",
    "expected_time_star",
    "extract_graph",
    "graph_stabilizers",
    "groups_equal",
    "lc_equivalent",
    "local_complement",
    "parse_edge_list",
    "plan_growth",
    "preset",
    "preset_names",
    "run_monte_carlo",
    "run_trial",
    "sweep_csv",
    "threshold_ratio",
    "validate",
]
