// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0
