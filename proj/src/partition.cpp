#include "jackpf/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "jackpf/error.hpp"

namespace jackpf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(lambda.row(1)), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

Partition double_union(const Partition& lambda) {
  std::vector<int> out;
  out.reserve(2 * lambda.parts().size());
  for (int p : lambda.parts()) {
    out.push_back(p);
    out.push_back(p);
  }
  return Partition(std::move(out));
}

FrobeniusCoords to_frobenius(const Partition& mu) {
  const Partition mu_t = conjugate(mu);
  FrobeniusCoords f;
  for (int i = 1; mu.row(i) >= i; ++i) {
    f.P.push_back(mu.row(i) - i);
    f.Q.push_back(mu_t.row(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
  if (f.P.size() != f.Q.size()) throw InvalidArgument("Frobenius coordinates need |P| = |Q|");
  auto check = [](const std::vector<int>& v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw InvalidArgument(std::string("negative Frobenius coordinate in ") + name);
      if (i > 0 && v[i] >= v[i - 1]) throw InvalidArgument(std::string(name) + " must be strictly decreasing");
    }
  };
  check(f.P, "P");
  check(f.Q, "Q");
  const int d = f.diagonal();
  std::vector<int> rows;
  for (int i = 1; i <= d; ++i) rows.push_back(f.P[static_cast<std::size_t>(i - 1)] + i);
  // rows below the diagonal square: row i has one box in each column j <= d whose height Q_j + j reaches i
  for (int i = d + 1;; ++i) {
    int len = 0;
    for (int j = 1; j <= d; ++j) {
      if (f.Q[static_cast<std::size_t>(j - 1)] + j >= i) ++len;
    }
    if (len == 0) break;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    enumerate_into(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int cap) {
  if (n < 0) throw InvalidArgument("cannot enumerate partitions of a negative number");
  if (n > cap) throw CapExceeded("partition enumeration capped at n = " + std::to_string(cap));
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions_up_to(int max_size, int cap) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = enumerate_partitions(n, cap);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

std::string to_string(const Partition& lambda) {
  std::string s = "[";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda.parts()[i]);
  }
  return s + "]";
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) {
      parts.push_back(std::stoi(digits));
      digits.clear();
    }
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '(' || c == ')') {
      flush();
    } else {
      throw InvalidArgument("not a partition: '" + text + "'");
    }
  }
  flush();
  return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) { return os << to_string(lambda); }

}  // namespace jackpf
