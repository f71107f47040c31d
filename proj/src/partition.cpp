#include "ualg/partition.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

#include "ualg/error.hpp"

namespace ualg {

  Partition::Partition(std::span<std::size_t const> labels)
      : _labels(labels.size()) {
    // Relabel in order of first appearance.
    std::unordered_map<std::size_t, std::uint32_t> seen;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto [it, inserted] = seen.try_emplace(
          labels[x], static_cast<std::uint32_t>(seen.size()));
      _labels[x] = it->second;
    }
    _num_blocks = seen.size();
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = i;
    }
    return Partition(labels);
  }

  Partition Partition::indiscrete(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
  }

  Partition Partition::from_blocks(
      std::size_t                              n,
      std::vector<std::vector<Element>> const& blocks) {
    constexpr auto           unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> labels(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        raise(ErrorCode::invalid_input, "empty block");
      }
      for (Element x : blocks[b]) {
        if (x >= n) {
          raise(ErrorCode::out_of_carrier,
                "element " + std::to_string(x) + " in a partition of size "
                    + std::to_string(n));
        }
        if (labels[x] != unset) {
          raise(ErrorCode::invalid_input,
                "element " + std::to_string(x) + " appears twice");
        }
        labels[x] = b;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (labels[x] == unset) {
        raise(ErrorCode::invalid_input,
              "element " + std::to_string(x) + " is missing");
      }
    }
    return Partition(labels);
  }

  std::vector<std::vector<Element>> Partition::blocks() const {
    std::vector<std::vector<Element>> result(_num_blocks);
    for (std::size_t x = 0; x < _labels.size(); ++x) {
      result[_labels[x]].push_back(static_cast<Element>(x));
    }
    return result;
  }

  std::vector<Element> Partition::representatives() const {
    std::vector<Element> result;
    result.reserve(_num_blocks);
    for (std::size_t x = 0; x < _labels.size(); ++x) {
      if (_labels[x] == result.size()) {
        result.push_back(static_cast<Element>(x));
      }
    }
    return result;
  }

  bool Partition::refines(Partition const& that) const {
    if (size() != that.size()) {
      raise(ErrorCode::size_mismatch, "partitions of different sets");
    }
    // Each of our blocks maps to a single block of that.
    std::vector<std::uint32_t> image(_num_blocks,
                                     std::numeric_limits<std::uint32_t>::max());
    for (std::size_t x = 0; x < size(); ++x) {
      auto& slot = image[_labels[x]];
      if (slot == std::numeric_limits<std::uint32_t>::max()) {
        slot = that._labels[x];
      } else if (slot != that._labels[x]) {
        return false;
      }
    }
    return true;
  }

  Partition meet(Partition const& a, Partition const& b) {
    if (a.size() != b.size()) {
      raise(ErrorCode::size_mismatch, "partitions of different sets");
    }
    std::vector<std::size_t> labels(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      labels[x] = std::size_t(a.block_of(x)) * b.num_blocks() + b.block_of(x);
    }
    return Partition(labels);
  }

  Partition parse_partition(std::string_view           text,
                            std::optional<std::size_t> expected_size) {
    std::vector<std::vector<Element>> blocks(1);
    std::size_t                       pos = 0, count = 0;
    Element                           largest = 0;
    bool want_number = true;
    auto skip = [&] {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip();
    if (pos == text.size()) {
      if (expected_size && *expected_size != 0) {
        raise(ErrorCode::size_mismatch, "empty partition text");
      }
      return Partition();
    }
    while (true) {
      skip();
      if (want_number) {
        std::size_t start = pos;
        std::size_t value = 0;
        while (pos < text.size()
               && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
          if (value > 1'000'000) {
            raise(ErrorCode::syntax, "element too large");
          }
          ++pos;
        }
        if (pos == start) {
          raise(ErrorCode::syntax,
                "at position " + std::to_string(pos) + ": expected an element");
        }
        blocks.back().push_back(static_cast<Element>(value));
        largest = std::max(largest, static_cast<Element>(value));
        ++count;
        want_number = false;
        continue;
      }
      if (pos == text.size()) {
        break;
      }
      if (text[pos] == ',') {
        ++pos;
      } else if (text[pos] == '|') {
        blocks.emplace_back();
        ++pos;
      } else {
        raise(ErrorCode::syntax, "at position " + std::to_string(pos)
                                     + ": expected ',' or '|'");
      }
      want_number = true;
    }
    std::size_t n = std::size_t(largest) + 1;
    if (count != n) {
      raise(ErrorCode::invalid_input,
            "partition must list each of 0.." + std::to_string(n - 1)
                + " exactly once");
    }
    if (expected_size && *expected_size != n) {
      raise(ErrorCode::size_mismatch,
            "partition of a " + std::to_string(n) + "-set, expected "
                + std::to_string(*expected_size));
    }
    return Partition::from_blocks(n, blocks);
  }

  std::string to_string(Partition const& p) {
    std::string result;
    for (auto const& block : p.blocks()) {
      if (!result.empty()) {
        result += '|';
      }
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i != 0) {
          result += ',';
        }
        result += std::to_string(block[i]);
      }
    }
    return result;
  }

  std::uint64_t bell_number(std::size_t n) {
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> next{row.back()};
      for (auto v : row) {
        if (next.back() > std::numeric_limits<std::uint64_t>::max() - v) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        next.push_back(next.back() + v);
      }
      row = std::move(next);
    }
    return row.front();
  }

  std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<Partition> result;
    if (n == 0) {
      result.emplace_back();
      return result;
    }
    // Restricted growth strings in lexicographic order: a[0] = 0 and
    // a[i] <= 1 + max(a[0..i-1]).
    std::vector<std::size_t> a(n, 0), prefix_max(n, 0);
    while (true) {
      result.emplace_back(a);
      std::size_t i = n - 1;
      while (i > 0 && a[i] > prefix_max[i - 1]) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++a[i];
      prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        a[j]          = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
    return result;
  }

}  // namespace ualg
