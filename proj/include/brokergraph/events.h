// Copyright 2026 The brokergraph Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brokergraph/timing.h"

namespace brokergraph {

using NodeId = size_t;
using FragmentId = size_t;

enum class EventKind {
    kAttemptStarted,
    kHeraldSuccess,
    kHeraldFailure,
    kFragmentComplete,
    kFragmentDamaged,
    kTransferDone,
    kReadoutDone,
};

std::string_view event_kind_name(EventKind kind);
EventKind parse_event_kind(std::string_view name);

struct Event {
    Nanos timestamp_ns = 0;
    EventKind kind = EventKind::kAttemptStarted;
    std::vector<NodeId> nodes;
    std::optional<FragmentId> fragment;

    bool operator==(const Event &) const = default;
};

using EventLog = std::vector<Event>;
using EventSink = std::function<void(const Event &)>;

/// One line per event: "timestamp_ns,kind,fragment,nodes" with nodes joined
/// by ';' and an empty fragment field when absent.
std::string event_log_to_csv(const EventLog &log);
EventLog event_log_from_csv(std::string_view text);

}  // namespace brokergraph
