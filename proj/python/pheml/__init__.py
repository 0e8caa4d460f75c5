# Copyright 2026 The pheml Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python access to the pheml simulator and cryptosystems."""

import json
import os

from pheml._core import (
    CloudRsaKey,
    PaillierKey,
    PhemlError,
    bench_blocks,
    check_lr_budget,
    rsa_bits_for,
)
from pheml import _core

__all__ = [
    "CloudRsaKey",
    "PaillierKey",
    "PhemlError",
    "bench_blocks",
    "check_lr_budget",
    "rsa_bits_for",
    "run",
]


def run(protocol, dataset, schema=None, **kwargs):
    """Runs one protocol end to end; returns a dict with parsed metrics.

    ``schema`` defaults to the dataset path with a ``.schema.json`` suffix.
    Keyword arguments mirror the CLI flags (``owners``, ``key_bits``,
    ``iters``, ``lambda_``, ``latency_ms``, ``seed``, ``test_fraction``,
    ``quantized_oracle``).
    """
    if schema is None:
        schema = os.path.splitext(dataset)[0] + ".schema.json"
    out = _core.run(protocol, os.fspath(dataset), os.fspath(schema), **kwargs)
    out["metrics"] = json.loads(out["metrics"])
    return out
