#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/element.hpp"

namespace ualg {

  // An equivalence relation on {0, ..., n - 1} in canonical form: block ids
  // are numbered in order of their least element, so the label sequence is a
  // restricted growth string and equality is structural. Partitions are
  // ordered lexicographically by that string.
  class Partition {
   public:
    Partition() = default;
    // Any labelling; equal labels mean same block. Canonicalised.
    explicit Partition(std::span<std::size_t const> labels);
    explicit Partition(std::vector<std::size_t> const& labels)
        : Partition(std::span<std::size_t const>(labels)) {}

    static Partition discrete(std::size_t n);
    static Partition indiscrete(std::size_t n);
    // Blocks must cover {0, ..., n - 1} exactly once.
    static Partition from_blocks(std::size_t                           n,
                                 std::vector<std::vector<Element>> const& blocks);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    std::size_t num_blocks() const noexcept {
      return _num_blocks;
    }
    std::uint32_t block_of(std::size_t x) const {
      return _labels[x];
    }
    std::span<std::uint32_t const> labels() const noexcept {
      return _labels;
    }
    bool same_block(std::size_t x, std::size_t y) const {
      return _labels[x] == _labels[y];
    }
    std::vector<std::vector<Element>> blocks() const;
    // Least element of every block, in block order.
    std::vector<Element> representatives() const;

    // Every block of *this lies inside a block of that.
    bool refines(Partition const& that) const;

    bool operator==(Partition const&) const = default;
    auto operator<=>(Partition const& that) const {
      return _labels <=> that._labels;
    }

   private:
    std::vector<std::uint32_t> _labels;
    std::size_t                _num_blocks = 0;
  };

  Partition meet(Partition const& a, Partition const& b);

  // "0,2|1,3". Blocks may be given in any order; elements must be exactly
  // 0..n-1 with no repeats. If expected_size is set, n must match it.
  Partition   parse_partition(std::string_view             text,
                              std::optional<std::size_t> expected_size
                              = std::nullopt);
  std::string to_string(Partition const& p);

  std::uint64_t bell_number(std::size_t n);

  // Every partition of an n-set, in canonical (lexicographic) order.
  std::vector<Partition> all_partitions(std::size_t n);

}  // namespace ualg
