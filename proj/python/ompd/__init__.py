# Copyright 2026 The OMPD Authors. All rights reserved.
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
"""Speech polarity detection from oscillating moments."""

from ._core import (  # noqa: F401
    FormatError,
    InsufficientFramesError,
    InsufficientHarmonicsError,
    InvalidArgumentError,
    NoVoicingError,
    NotFoundError,
    OmpdError,
    TooShortError,
    detect,
    detect_file,
    eval_corpus,
    frame_shifts,
    make_eval_corpus,
    oscillating_moment,
    read_wav,
    synthesize,
    t0_mean,
    write_wav,
)

__all__ = [name for name in dir() if not name.startswith("_")]
