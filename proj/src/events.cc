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

#include "brokergraph/events.h"

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

namespace brokergraph {

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 7> kNames = {{
    {EventKind::kAttemptStarted, "AttemptStarted"},
    {EventKind::kHeraldSuccess, "HeraldSuccess"},
    {EventKind::kHeraldFailure, "HeraldFailure"},
    {EventKind::kFragmentComplete, "FragmentComplete"},
    {EventKind::kFragmentDamaged, "FragmentDamaged"},
    {EventKind::kTransferDone, "TransferDone"},
    {EventKind::kReadoutDone, "ReadoutDone"},
}};

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string_view event_kind_name(EventKind kind) {
    for (const auto &[k, name] : kNames) {
        if (k == kind) return name;
    }
    throw std::invalid_argument("unknown event kind");
}

EventKind parse_event_kind(std::string_view name) {
    for (const auto &[k, n] : kNames) {
        if (n == name) return k;
    }
    throw std::invalid_argument("unknown event kind '" + std::string(name) + "'");
}

std::string event_log_to_csv(const EventLog &log) {
    std::ostringstream out;
    out << "timestamp_ns,kind,fragment,nodes\n";
    for (const auto &e : log) {
        out << e.timestamp_ns << ',' << event_kind_name(e.kind) << ',';
        if (e.fragment) out << *e.fragment;
        out << ',';
        for (size_t i = 0; i < e.nodes.size(); i++) {
            if (i) out << ';';
            out << e.nodes[i];
        }
        out << '\n';
    }
    return out.str();
}

EventLog event_log_from_csv(std::string_view text) {
    EventLog log;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.rfind("timestamp_ns", 0) == 0) continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != 4) throw std::invalid_argument("bad event line: " + line);
        Event e;
        e.timestamp_ns = std::stoll(fields[0]);
        e.kind = parse_event_kind(fields[1]);
        if (!fields[2].empty()) e.fragment = std::stoull(fields[2]);
        if (!fields[3].empty()) {
            for (const auto &n : split(fields[3], ';')) e.nodes.push_back(std::stoull(n));
        }
        log.push_back(std::move(e));
    }
    return log;
}

}  // namespace brokergraph
