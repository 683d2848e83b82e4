#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partineq/types.hpp"

namespace partineq {

/// A partition in frequency notation (1^{f_1}, 2^{f_2}, ...).
///
/// Entries are kept sorted by ascending part with every stored frequency
/// at least one, so two partitions are equal exactly when their entry
/// lists are equal. The weight is cached.
class Partition {
 public:
  struct Entry {
    Int part;
    Int freq;
    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  Partition() = default;

  /// Builds the canonical partition from (part, frequency) pairs. Zero
  /// frequencies are dropped and duplicate parts are merged.
  /// Throws InvalidArgument on part < 1 or frequency < 0.
  static Partition from_entries(std::span<const std::pair<Int, Int>> entries);
  static Partition from_entries(std::initializer_list<std::pair<Int, Int>> entries);

  /// Builds a partition from a list of parts, e.g. {5, 3, 3}.
  static Partition from_parts(std::span<const Int> parts);
  static Partition from_parts(std::initializer_list<Int> parts);

  /// Parses `2^3,5,7^2` or `5,3,3`. Whitespace is ignored; the empty
  /// string and `()` denote the empty partition.
  static Partition parse(std::string_view text);

  Int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t distinct_parts() const noexcept { return entries_.size(); }
  Int num_parts() const;

  /// Frequency of `part`; zero when absent.
  Int freq(Int part) const noexcept;

  /// Smallest and largest part. Throws InvalidArgument on the empty partition.
  Int smallest_part() const;
  Int largest_part() const;

  std::span<const Entry> entries() const noexcept { return entries_; }

  /// Parts in weakly decreasing order, expanded.
  std::vector<Int> parts() const;

  /// `p^f` notation sorted by ascending part, e.g. `2,3^2`.
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.entries_ == b.entries_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  friend class PartitionBuilder;
  std::vector<Entry> entries_;
  Int weight_ = 0;
};

/// Mutable frequency map used to assemble images of injections. Frequencies
/// may go transiently negative; build() rejects any that remain negative.
class PartitionBuilder {
 public:
  PartitionBuilder() = default;
  explicit PartitionBuilder(const Partition& base);

  /// Adds `delta` (possibly negative) to the frequency of `part`.
  PartitionBuilder& add(Int part, Int delta);
  /// Sets the frequency of `part`.
  PartitionBuilder& set(Int part, Int freq);
  Int freq(Int part) const noexcept;

  /// Throws NegativeFrequency if any frequency is negative.
  Partition build() const;

 private:
  std::vector<Partition::Entry> entries_;  // sorted by part, zeros allowed
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Restricted partition families.
///
///   D(L,s)  nonempty, parts in {s+1..L+s}
///   I(L,s,k) smallest part s, parts <= L+s, no part k (s+1 <= k <= L+s)
///   A(L,s)  parts in {s..L+s}, at least one s
///   B(L,s)  parts in {s..L+s}, at least one L+s-1
///   E(L,s)  parts in {s..L+s}, no part L+s-1
///   F(L,s)  parts in {s..L+s}
class SetSpec {
 public:
  enum class Family { D, I, A, B, E, F };

  static SetSpec D(Int L, Int s);
  static SetSpec I(Int L, Int s, Int k);
  /// C(L,s) = I(L,s,L+s-1).
  static SetSpec C(Int L, Int s);
  /// C*(L,s) = I(L,s,L); requires L >= s+1.
  static SetSpec Cstar(Int L, Int s);
  static SetSpec A(Int L, Int s);
  static SetSpec B(Int L, Int s);
  static SetSpec E(Int L, Int s);
  static SetSpec F(Int L, Int s);

  Family family() const noexcept { return family_; }
  Int L() const noexcept { return L_; }
  Int s() const noexcept { return s_; }
  /// Excluded part for I; zero otherwise.
  Int k() const noexcept { return k_; }

  Int min_part() const noexcept;
  Int max_part() const noexcept;
  /// Part that must occur at least once, or zero.
  Int required_part() const noexcept;
  /// Part that must not occur, or zero.
  Int forbidden_part() const noexcept;
  bool allows_empty() const noexcept;

  std::string to_string() const;

  friend bool operator==(const SetSpec&, const SetSpec&) = default;

 private:
  SetSpec(Family family, Int L, Int s, Int k) : family_(family), L_(L), s_(s), k_(k) {}
  Family family_;
  Int L_;
  Int s_;
  Int k_;
};

std::string_view family_name(SetSpec::Family family);

bool member(const SetSpec& spec, const Partition& p);

/// Default cap on N for materialising enumerations.
inline constexpr Int kDefaultEnumerationCap = 500;

/// Members of weight N in descending-lexicographic order of the frequency
/// vector read from the largest part down. Throws InvalidArgument if N
/// exceeds `cap`.
std::vector<Partition> enumerate(const SetSpec& spec, Int N, Int cap = kDefaultEnumerationCap);

/// Streams the same sequence as enumerate() without materialising it.
void for_each_member(const SetSpec& spec, Int N, const std::function<void(const Partition&)>& visit);

/// Number of members of weight N.
BigInt count(const SetSpec& spec, Int N);

/// count(spec, n) for n = 0..N_max.
std::vector<BigInt> count_table(const SetSpec& spec, Int N_max);

}  // namespace partineq
