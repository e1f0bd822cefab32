// Copyright 2026 The navfuse Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace navfuse {

inline constexpr const char* kToolVersion = "0.1.0";

// Bumped whenever the checkpoint binary layout changes.
inline constexpr int kCheckpointFormatVersion = 1;

}  // namespace navfuse
