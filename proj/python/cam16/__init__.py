# SPDX-License-Identifier: Apache-2.0
# Copyright contributors to the cam16 project.
"""CAM16 color appearance model with robust edge-case handling."""

from ._cam16 import *  # noqa: F401,F403
from ._cam16 import legacy  # noqa: F401
