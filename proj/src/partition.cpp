#include "partineq/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace partineq {

namespace {

Int parse_int(std::string_view token, std::string_view context) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw InvalidArgument("cannot parse integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  return value;
}

Int weight_of(const std::vector<Partition::Entry>& entries) {
  Int w = 0;
  for (const auto& e : entries) w = checked_add(w, checked_mul(e.part, e.freq));
  return w;
}

}  // namespace

Partition Partition::from_entries(std::span<const std::pair<Int, Int>> entries) {
  PartitionBuilder b;
  for (const auto& [part, freq] : entries) {
    if (part < 1) throw InvalidArgument("part must be positive, got " + std::to_string(part));
    if (freq < 0) throw InvalidArgument("frequency must be nonnegative, got " + std::to_string(freq));
    b.add(part, freq);
  }
  return b.build();
}

Partition Partition::from_entries(std::initializer_list<std::pair<Int, Int>> entries) {
  return from_entries(std::span<const std::pair<Int, Int>>(entries.begin(), entries.size()));
}

Partition Partition::from_parts(std::span<const Int> parts) {
  PartitionBuilder b;
  for (Int p : parts) {
    if (p < 1) throw InvalidArgument("part must be positive, got " + std::to_string(p));
    b.add(p, 1);
  }
  return b.build();
}

Partition Partition::from_parts(std::initializer_list<Int> parts) {
  return from_parts(std::span<const Int>(parts.begin(), parts.size()));
}

Partition Partition::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '(' && c != ')') cleaned.push_back(c);
  std::vector<std::pair<Int, Int>> entries;
  std::string_view rest = cleaned;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (token.empty()) throw InvalidArgument("empty entry in partition '" + std::string(text) + "'");
    auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      entries.emplace_back(parse_int(token, text), 1);
    } else {
      entries.emplace_back(parse_int(token.substr(0, caret), text), parse_int(token.substr(caret + 1), text));
    }
  }
  return from_entries(entries);
}

Int Partition::num_parts() const {
  Int n = 0;
  for (const auto& e : entries_) n = checked_add(n, e.freq);
  return n;
}

Int Partition::freq(Int part) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), part,
                             [](const Entry& e, Int p) { return e.part < p; });
  return (it != entries_.end() && it->part == part) ? it->freq : 0;
}

Int Partition::smallest_part() const {
  if (entries_.empty()) throw InvalidArgument("empty partition has no smallest part");
  return entries_.front().part;
}

Int Partition::largest_part() const {
  if (entries_.empty()) throw InvalidArgument("empty partition has no largest part");
  return entries_.back().part;
}

std::vector<Int> Partition::parts() const {
  std::vector<Int> out;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    for (Int i = 0; i < it->freq; ++i) out.push_back(it->part);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) os << ',';
    first = false;
    os << e.part;
    if (e.freq != 1) os << '^' << e.freq;
  }
  return os.str();
}

PartitionBuilder::PartitionBuilder(const Partition& base) : entries_(base.entries_) {}

PartitionBuilder& PartitionBuilder::add(Int part, Int delta) {
  if (part < 1) throw InvalidArgument("part must be positive, got " + std::to_string(part));
  auto it = std::lower_bound(entries_.begin(), entries_.end(), part,
                             [](const Partition::Entry& e, Int p) { return e.part < p; });
  if (it != entries_.end() && it->part == part) {
    it->freq = checked_add(it->freq, delta);
  } else {
    entries_.insert(it, Partition::Entry{part, delta});
  }
  return *this;
}

PartitionBuilder& PartitionBuilder::set(Int part, Int freq) {
  add(part, 0);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), part,
                             [](const Partition::Entry& e, Int p) { return e.part < p; });
  it->freq = freq;
  return *this;
}

Int PartitionBuilder::freq(Int part) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), part,
                             [](const Partition::Entry& e, Int p) { return e.part < p; });
  return (it != entries_.end() && it->part == part) ? it->freq : 0;
}

Partition PartitionBuilder::build() const {
  Partition p;
  p.entries_.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (e.freq < 0)
      throw NegativeFrequency("frequency of part " + std::to_string(e.part) + " would be " + std::to_string(e.freq));
    if (e.freq > 0) p.entries_.push_back(e);
  }
  p.weight_ = weight_of(p.entries_);
  return p;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& e : p.entries()) {
    h ^= static_cast<std::size_t>(e.part) * 0x9e3779b97f4a7c15ULL;
    h *= 0x100000001b3ULL;
    h ^= static_cast<std::size_t>(e.freq) + 0x7f4a7c15ULL;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// SetSpec

namespace {

void require_positive(Int L, Int s) {
  if (L < 1 || s < 1)
    throw InvalidArgument("L and s must be positive (L=" + std::to_string(L) + ", s=" + std::to_string(s) + ")");
}

}  // namespace

SetSpec SetSpec::D(Int L, Int s) {
  require_positive(L, s);
  return SetSpec(Family::D, L, s, 0);
}

SetSpec SetSpec::I(Int L, Int s, Int k) {
  require_positive(L, s);
  if (k < s + 1 || k > L + s)
    throw InvalidArgument("I(L,s,k) requires s+1 <= k <= L+s (L=" + std::to_string(L) + ", s=" + std::to_string(s) +
                          ", k=" + std::to_string(k) + ")");
  return SetSpec(Family::I, L, s, k);
}

SetSpec SetSpec::C(Int L, Int s) {
  require_positive(L, s);
  if (L < 2) throw InvalidArgument("C(L,s) requires L >= 2");
  return I(L, s, L + s - 1);
}

SetSpec SetSpec::Cstar(Int L, Int s) {
  require_positive(L, s);
  if (L < s + 1) throw InvalidArgument("C*(L,s) requires L >= s+1");
  return I(L, s, L);
}

SetSpec SetSpec::A(Int L, Int s) {
  require_positive(L, s);
  return SetSpec(Family::A, L, s, 0);
}

SetSpec SetSpec::B(Int L, Int s) {
  require_positive(L, s);
  return SetSpec(Family::B, L, s, 0);
}

SetSpec SetSpec::E(Int L, Int s) {
  require_positive(L, s);
  return SetSpec(Family::E, L, s, 0);
}

SetSpec SetSpec::F(Int L, Int s) {
  require_positive(L, s);
  return SetSpec(Family::F, L, s, 0);
}

Int SetSpec::min_part() const noexcept { return family_ == Family::D ? s_ + 1 : s_; }

Int SetSpec::max_part() const noexcept { return L_ + s_; }

Int SetSpec::required_part() const noexcept {
  switch (family_) {
    case Family::I:
    case Family::A:
      return s_;
    case Family::B:
      return L_ + s_ - 1;
    default:
      return 0;
  }
}

Int SetSpec::forbidden_part() const noexcept {
  switch (family_) {
    case Family::I:
      return k_;
    case Family::E:
      return L_ + s_ - 1;
    default:
      return 0;
  }
}

bool SetSpec::allows_empty() const noexcept { return family_ == Family::E || family_ == Family::F; }

std::string_view family_name(SetSpec::Family family) {
  switch (family) {
    case SetSpec::Family::D: return "D";
    case SetSpec::Family::I: return "I";
    case SetSpec::Family::A: return "A";
    case SetSpec::Family::B: return "B";
    case SetSpec::Family::E: return "E";
    case SetSpec::Family::F: return "F";
  }
  return "?";
}

std::string SetSpec::to_string() const {
  std::string out(family_name(family_));
  out += "(" + std::to_string(L_) + "," + std::to_string(s_);
  if (family_ == Family::I) out += "," + std::to_string(k_);
  return out + ")";
}

bool member(const SetSpec& spec, const Partition& p) {
  if (p.empty()) return spec.allows_empty();
  if (p.smallest_part() < spec.min_part() || p.largest_part() > spec.max_part()) return false;
  if (Int r = spec.required_part(); r != 0 && p.freq(r) == 0) return false;
  if (Int k = spec.forbidden_part(); k != 0 && p.freq(k) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Enumerator {
  std::vector<Int> parts;  // allowed parts, descending
  Int required;
  const std::function<void(const Partition&)>& visit;
  std::vector<std::pair<Int, Int>> stack;

  void run(std::size_t index, Int remaining) {
    if (index == parts.size()) {
      if (remaining == 0) emit();
      return;
    }
    const Int part = parts[index];
    const Int min_freq = (part == required) ? 1 : 0;
    for (Int f = remaining / part; f >= min_freq; --f) {
      if (f > 0) stack.emplace_back(part, f);
      run(index + 1, remaining - f * part);
      if (f > 0) stack.pop_back();
    }
  }

  void emit() {
    PartitionBuilder b;
    for (const auto& [part, f] : stack) b.add(part, f);
    visit(b.build());
  }
};

std::vector<Int> allowed_parts_descending(const SetSpec& spec) {
  std::vector<Int> parts;
  for (Int p = spec.max_part(); p >= spec.min_part(); --p)
    if (p != spec.forbidden_part()) parts.push_back(p);
  return parts;
}

}  // namespace

void for_each_member(const SetSpec& spec, Int N, const std::function<void(const Partition&)>& visit) {
  if (N < 0) throw InvalidArgument("N must be nonnegative");
  if (N == 0) {
    if (spec.allows_empty()) visit(Partition{});
    return;
  }
  Enumerator e{allowed_parts_descending(spec), spec.required_part(), visit, {}};
  e.run(0, N);
}

std::vector<Partition> enumerate(const SetSpec& spec, Int N, Int cap) {
  if (N > cap)
    throw InvalidArgument("enumeration of N=" + std::to_string(N) + " exceeds cap " + std::to_string(cap));
  std::vector<Partition> out;
  for_each_member(spec, N, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<BigInt> count_table(const SetSpec& spec, Int N_max) {
  if (N_max < 0) throw InvalidArgument("N must be nonnegative");
  // Unrestricted counts over the allowed parts, then shift by the required part.
  std::vector<BigInt> free(static_cast<std::size_t>(N_max) + 1, 0);
  free[0] = 1;
  for (Int p = spec.min_part(); p <= spec.max_part(); ++p) {
    if (p == spec.forbidden_part()) continue;
    for (Int n = p; n <= N_max; ++n) free[n] += free[n - p];
  }
  std::vector<BigInt> out(free.size(), 0);
  const Int r = spec.required_part();
  for (Int n = 0; n <= N_max; ++n) {
    if (r != 0) {
      out[n] = n >= r ? free[n - r] : BigInt(0);
    } else {
      out[n] = free[n];
    }
  }
  if (!spec.allows_empty() && r == 0) out[0] = 0;
  return out;
}

BigInt count(const SetSpec& spec, Int N) {
  if (N < 0) throw InvalidArgument("N must be nonnegative");
  return count_table(spec, N)[static_cast<std::size_t>(N)];
}

}  // namespace partineq
