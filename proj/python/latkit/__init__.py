# Copyright 2026 The Authors.
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

"""Finite posets, closure operators, nuclei and frames."""

from latkit._latkit import (
    CapExceeded,
    LatkitError,
    Map,
    Poset,
    TheoremBreach,
    b2,
    boolean,
    chain,
    classify,
    closure_systems,
    clsys,
    convexity,
    dcclsys,
    default_rules,
    filters,
    generate_closure,
    heyting_implication,
    hmj,
    identity,
    kleene_generate,
    least_nucleus_above,
    m3,
    n5,
    nuclear_core,
    nuclear_rules,
    nuclei,
    nucleus_join,
    rule_closure,
    run,
    tarski,
    v4,
    validate_structure,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
