# Copyright 2026 The Spectrawl Authors
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

"""Graph discrimination toolkit: 1-WL refinement, spectral separability tests
and anonymous diagonal GNN modules built from closed-walk counts."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import SpectrawlError, discriminate_pair_json

__all__ = [name for name in dir() if not name.startswith("_")]


def discriminate_pair(g1, g2, filter=None, sigma="relu", condition_depth=None):
    """Runs every discrimination method on a pair and returns the report dict."""
    return _json.loads(discriminate_pair_json(g1, g2, filter, sigma, condition_depth))
