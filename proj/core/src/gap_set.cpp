#include "diffseq/gap_set.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "diffseq/error.hpp"

namespace diffseq {

namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw InvalidArgument("gap set: not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

GapSet::GapSet() : GapSet(Kind::kPowers, 2, {}) {}

GapSet::GapSet(Kind kind, std::uint64_t base, std::vector<std::uint64_t> members)
    : kind_(kind), base_(base), members_(std::move(members)) {}

GapSet GapSet::powers_of(std::uint64_t base) {
  if (base < 2) throw InvalidArgument("gap set: base must be at least 2");
  return GapSet(Kind::kPowers, base, {});
}

GapSet GapSet::explicit_set(const std::set<std::uint64_t>& members) {
  if (members.empty()) throw InvalidArgument("gap set: explicit set is empty");
  if (*members.begin() == 0) throw InvalidArgument("gap set: members must be positive");
  return GapSet(Kind::kExplicit, 0, {members.begin(), members.end()});
}

GapSet GapSet::parse(std::string_view text) {
  if (text == "pow2") return GapSet();
  constexpr std::string_view kPowers = "powers-of-";
  constexpr std::string_view kExplicit = "explicit:";
  if (text.starts_with(kPowers)) return powers_of(parse_u64(text.substr(kPowers.size())));
  if (text.starts_with(kExplicit)) {
    std::set<std::uint64_t> members;
    std::string_view rest = text.substr(kExplicit.size());
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      members.insert(parse_u64(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) throw InvalidArgument("gap set: trailing comma");
    }
    return explicit_set(members);
  }
  throw InvalidArgument("gap set: expected 'powers-of-B' or 'explicit:a,b,...', got '" +
                        std::string(text) + "'");
}

bool GapSet::contains(std::uint64_t g) const {
  if (g == 0) return false;
  if (kind_ == Kind::kExplicit) return std::binary_search(members_.begin(), members_.end(), g);
  while (g % base_ == 0) g /= base_;
  return g == 1;
}

std::vector<std::uint64_t> GapSet::members_up_to(std::uint64_t limit) const {
  std::vector<std::uint64_t> out;
  if (kind_ == Kind::kExplicit) {
    auto end = std::upper_bound(members_.begin(), members_.end(), limit);
    out.assign(members_.begin(), end);
    return out;
  }
  for (std::uint64_t g = 1; g <= limit;) {
    out.push_back(g);
    if (g > std::numeric_limits<std::uint64_t>::max() / base_) break;
    g *= base_;
  }
  return out;
}

std::string GapSet::describe() const {
  if (kind_ == Kind::kPowers) return "powers-of-" + std::to_string(base_);
  std::string out = "explicit:";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out;
}

}  // namespace diffseq
