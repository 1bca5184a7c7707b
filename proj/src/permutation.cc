#include "scda/permutation.h"

#include <deque>
#include <unordered_map>

#include "scda/error.h"

namespace scda {

bool is_bijection(std::span<const std::size_t> mapping) {
  std::vector<bool> hit(mapping.size(), false);
  for (std::size_t target : mapping) {
    if (target >= mapping.size() || hit[target]) return false;
    hit[target] = true;
  }
  return true;
}

PermutationRecord build_permutation(std::span<const std::string> t,
                                    std::span<const std::string> t_prime) {
  if (t.size() != t_prime.size()) {
    throw invalid_argument("build_permutation: sequences differ in length (" +
                           std::to_string(t.size()) + " vs " +
                           std::to_string(t_prime.size()) + ")");
  }
  std::unordered_map<std::string, std::deque<std::size_t>> positions;
  for (std::size_t i = 0; i < t.size(); ++i) positions[t[i]].push_back(i);

  PermutationRecord record;
  record.bases.assign(t.begin(), t.end());
  record.mapping.reserve(t.size());
  for (const auto& element : t_prime) {
    auto it = positions.find(element);
    if (it == positions.end() || it->second.empty()) {
      throw invalid_argument("build_permutation: '" + element +
                             "' has no unmatched occurrence in the source");
    }
    record.mapping.push_back(it->second.front());
    it->second.pop_front();
  }
  return record;
}

std::vector<std::string> apply_permutation(std::span<const std::size_t> mapping,
                                           std::span<const std::string> sequence) {
  if (mapping.size() != sequence.size() || !is_bijection(mapping)) {
    throw invalid_argument("apply_permutation: mapping is not a permutation of "
                           "the sequence");
  }
  std::vector<std::string> out;
  out.reserve(sequence.size());
  for (std::size_t source : mapping) out.push_back(sequence[source]);
  return out;
}

bool is_involution(std::span<const std::size_t> mapping) {
  if (!is_bijection(mapping)) return false;
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (mapping[mapping[i]] != i) return false;
  }
  return true;
}

bool is_involution(const PermutationRecord& record) {
  return is_involution(record.mapping);
}

Json to_json(const PermutationRecord& record) {
  Json json = Json::object();
  json["bases"] = record.bases;
  Json mapping = Json::array();
  for (std::size_t m : record.mapping) mapping.push_back(m + 1);
  json["mapping"] = std::move(mapping);
  return json;
}

PermutationRecord permutation_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("bases") || !json.contains("mapping")) {
    throw data_error("permutation record lacks \"bases\" or \"mapping\"");
  }
  const Json& bases = json["bases"];
  const Json& mapping = json["mapping"];
  if (!bases.is_array() || !mapping.is_array()) {
    throw data_error("permutation \"bases\" and \"mapping\" must be arrays");
  }
  PermutationRecord record;
  for (const auto& b : bases) {
    if (!b.is_string()) throw data_error("permutation base is not a string");
    record.bases.push_back(b.get<std::string>());
  }
  for (const auto& m : mapping) {
    if (!m.is_number_integer() || m.get<long long>() < 1) {
      throw data_error("permutation mapping entries must be integers >= 1");
    }
    record.mapping.push_back(static_cast<std::size_t>(m.get<long long>() - 1));
  }
  if (record.mapping.size() != record.bases.size() ||
      !is_bijection(record.mapping)) {
    throw data_error("permutation mapping is not a bijection over the bases");
  }
  return record;
}

}  // namespace scda
