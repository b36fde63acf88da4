// Copyright 2026 The hlink Authors
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

#include <string_view>

#include <json.hpp>

#include "hlink/campaign.hpp"
#include "hlink/graph.hpp"
#include "hlink/linkage.hpp"
#include "hlink/mader.hpp"
#include "hlink/planar.hpp"
#include "hlink/structures.hpp"

namespace hlink {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "hlink-report/1";

/// Top-level object {"schema": ..., "command": command}.
Json report_header(std::string_view command);

Json to_json(const PathSeq& p);
Json to_json(const Subdivision& s);
Json to_json(const LinkageResult& r);
Json to_json(const LinkedReport& r);
Json to_json(const GoodPaths& p);
Json to_json(const MaderCertificate& c);
Json to_json(const SeparatingPair& p);
Json to_json(const Flower& f);
Json to_json(const RotationEmbedding& e);
Json to_json(const ThreePlanarCertificate& c);
Json to_json(const DischargeWitness& w);
Json to_json(const InstanceRecord& r, bool timing = true);
/// `timing` false drops wall-clock fields, so that replays compare equal.
Json to_json(const CampaignReport& r, bool timing = true);

/// Inverse of the witness serializers. Throw ParseError on a missing field
/// or a wrong type (line 0: JSON carries no line numbers).
Subdivision subdivision_from_json(const Json& j);
Flower flower_from_json(const Json& j);
RotationEmbedding embedding_from_json(const Json& j);
ThreePlanarCertificate certificate_from_json(const Json& j);

}  // namespace hlink
