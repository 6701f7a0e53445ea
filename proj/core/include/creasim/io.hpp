#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "creasim/metrics.hpp"
#include "creasim/network.hpp"
#include "creasim/society.hpp"

namespace creasim {

using json = nlohmann::json;

/// Canonical encoding: compact, keys sorted, floats rendered like "%.17g",
/// LF only. Two equal documents always produce identical bytes, which is
/// what makes config hashing and byte-equality run comparisons meaningful.
/// Non-finite floats are rejected.
std::string canonical_dump(const json& j);

/// The scalar float encoding canonical_dump uses, for CSV cells.
std::string canonical_double(double v);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, std::string_view content);

/// UTC wall clock, ISO 8601 with trailing Z.
std::string iso8601_utc_now();

// -- config --------------------------------------------------------------

/// Parse and validate. `base_dir` anchors relative graph-file references;
/// file references are inlined so the result is self-contained. Structural
/// or semantic problems raise ConfigError with the offending key path.
SocietyConfig parse_society_config(const json& j, const std::filesystem::path& base_dir);
SocietyConfig load_society_config(const std::filesystem::path& file);

json society_config_json(const SocietyConfig& cfg);
json agent_spec_json(const AgentSpec& spec);
AgentSpec parse_agent_spec(const json& j, int d, const std::string& path);

// -- graph file ----------------------------------------------------------

/// {"n", "m", "seed", "edges"}; edges pair-normalized and sorted. For
/// graphs without BA provenance m and seed are recorded as 0.
json graph_json(const Graph& g, int m, std::uint64_t seed);
Graph parse_graph_json(const json& j, const std::string& path);

// -- run artifacts -------------------------------------------------------

json event_json(const Event& e);
std::string serialize_events(const std::vector<Event>& events);
/// Inverse of serialize_events. Generated events regain sequential
/// artefact ids (registration order), which the file format leaves implicit.
std::vector<Event> parse_events(const std::string& jsonl);

json snapshot_json(const Snapshot& s);
std::string serialize_snapshots(const std::vector<Snapshot>& snapshots);
std::vector<Snapshot> parse_snapshots(const std::string& jsonl);

json final_state_json(const RunResult& r);

/// Stable digest of the canonicalized resolved config; doubles as run id.
std::string config_hash(const json& resolved_config);

json manifest_json(const std::string& cfg_hash, std::uint64_t seed,
                   const std::string& started_at, const std::string& finished_at,
                   const std::vector<std::string>& outputs);

}  // namespace creasim
