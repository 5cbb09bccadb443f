# Copyright 2026 The twistcode Authors
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

"""Python bindings for the twistcode simulator."""

import json

from ._core import (  # noqa: F401
    ConfigError,
    DomainError,
    Error,
    GeometryError,
    PauliString,
    SizeError,
    TwistLattice,
    build_lattice,
    flip_statistics,
    in_commutant,
    in_plaquette_group,
    pair_transform,
    parity_operator,
    reduce_by_stabilizers,
    run,
    version,
)

__version__ = version()


def run_report(config):
    """Run an experiment given a dict config; returns the parsed JSON report."""
    return json.loads(run(json.dumps(config), "json"))
