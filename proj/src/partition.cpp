#include "tropgw/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropgw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::count(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::joined(const Partition& other) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(p));
}

bool Partition::contains(const Partition& sub) const {
  return std::includes(parts_.begin(), parts_.end(), sub.parts_.begin(), sub.parts_.end(),
                       std::greater<>());
}

Partition Partition::without(const Partition& sub) const {
  if (!contains(sub)) {
    throw std::invalid_argument("(" + to_string(sub) + ") is not contained in (" +
                                to_string(*this) + ")");
  }
  std::vector<int> rest;
  std::set_difference(parts_.begin(), parts_.end(), sub.parts_.begin(), sub.parts_.end(),
                      std::back_inserter(rest), std::greater<>());
  return Partition(std::move(rest));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  // reverse-lexicographic: (3) before (2,1) before (1,1,1)
  return b.parts_ <=> a.parts_;
}

std::uint64_t aut_count(const Partition& mu) {
  std::uint64_t result = 1;
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < mu.parts().size(); ++i) {
    run = (i > 0 && mu[i] == mu[i - 1]) ? run + 1 : 1;
    result *= run;
  }
  return result;
}

std::uint64_t centralizer_size(const Partition& mu) {
  std::uint64_t result = aut_count(mu);
  for (int p : mu) result *= static_cast<std::uint64_t>(p);
  return result;
}

Rational centralizer_rational(const Partition& mu) {
  Integer z = 1;
  int run = 0;
  for (std::size_t i = 0; i < mu.parts().size(); ++i) {
    run = (i > 0 && mu[i] == mu[i - 1]) ? run + 1 : 1;
    z *= run * mu[i];
  }
  return Rational(z);
}

std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_length) {
  std::vector<Partition> out;
  if (d < 0) return out;
  const int cap = max_length.value_or(d);
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) >= cap) return;
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Partition> sub_partitions(const Partition& mu) {
  // distinct values with multiplicities; choose 0..k_j copies of each
  std::vector<std::pair<int, int>> groups;
  for (int p : mu) {
    if (groups.empty() || groups.back().first != p) groups.emplace_back(p, 0);
    ++groups.back().second;
  }
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      out.emplace_back(current);
      return;
    }
    const auto [value, mult] = groups[g];
    for (int c = 0; c <= mult; ++c) {
      rec(g + 1);
      current.push_back(value);
    }
    current.resize(current.size() - static_cast<std::size_t>(mult + 1));
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TildeExtension> tilde_extend(const Partition& mu, int d) {
  if (mu.size() > d) return std::nullopt;
  const int k = d - mu.size();
  const int j = mu.count(1);
  return TildeExtension{mu.joined(Partition::ones(k)),
                        Rational(binomial(static_cast<unsigned>(j + k), static_cast<unsigned>(k)))};
}

std::string to_string(const Partition& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(mu[i]);
  }
  return s;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.find_first_not_of(" \t") == std::string::npos) return Partition();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + item + "' in '" + text + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos || value <= 0) {
      throw std::invalid_argument("bad partition part '" + item + "' in '" + text + "'");
    }
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> parse_profile_list(const std::string& text) {
  std::vector<Partition> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_partition(item));
  if (!text.empty() && text.back() == ';') out.emplace_back();
  return out;
}

WElement WElement::basis(const Partition& mu, const Rational& c) {
  WElement w;
  w.add_term(mu, c);
  return w;
}

Rational WElement::coefficient(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WElement::add_term(const Partition& mu, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

WElement& WElement::operator+=(const WElement& other) {
  for (const auto& [mu, c] : other.terms_) add_term(mu, c);
  return *this;
}

WElement operator*(const Rational& c, const WElement& a) {
  WElement r;
  for (const auto& [mu, x] : a.terms_) r.add_term(mu, c * x);
  return r;
}

std::string to_string(const WElement& w) {
  if (w.is_zero()) return "0";
  std::string s;
  // largest partitions first
  for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += to_string(it->second) + "*(" + to_string(it->first) + ")";
  }
  return s;
}

}  // namespace tropgw
