#include "fsdim/separator.hpp"

#include <fstream>
#include <set>
#include <unordered_set>

#include "fsdim/endpoints.hpp"
#include "fsdim/error.hpp"

namespace fsdim {

namespace {
// 2^k digits of the target must stay addressable.
constexpr std::size_t kMaxTargetExponent = 40;
}  // namespace

SeparatorEnumerator SeparatorEnumerator::canonical(unsigned base) {
  check_base(base);
  return SeparatorEnumerator(base, EnumeratorKind::Canonical, "canonical");
}

SeparatorEnumerator SeparatorEnumerator::block_permuted(unsigned base, std::size_t block_len,
                                                        BlockPermutation sigma) {
  check_base(base);
  if (block_len == 0) throw Error(ErrorCode::InvalidPermutation, "block length must be >= 1");
  Integer expected = int_pow(base, block_len);
  if (Integer(static_cast<unsigned long>(sigma.size())) != expected) {
    throw Error(ErrorCode::InvalidPermutation,
                "permutation lists " + std::to_string(sigma.size()) + " blocks, expected " +
                    expected.get_str());
  }
  std::set<Digits> images;
  for (const auto& [from, to] : sigma) {
    if (from.size() != block_len || to.size() != block_len) {
      throw Error(ErrorCode::InvalidPermutation, "block '" + to_string(from) + " -> " +
                                                     to_string(to) + "' has wrong length");
    }
    check_digits(from, base);
    check_digits(to, base);
    if (!images.insert(to).second) {
      throw Error(ErrorCode::InvalidPermutation, "block '" + to_string(to) + "' is hit twice");
    }
  }
  SeparatorEnumerator f(base, EnumeratorKind::BlockPermuted,
                        "blockperm:" + std::to_string(block_len));
  f.block_len_ = block_len;
  f.sigma_ = std::move(sigma);
  return f;
}

SeparatorEnumerator SeparatorEnumerator::targeted(const DigitStream& x, std::string description) {
  SeparatorEnumerator f(x.base(), EnumeratorKind::Targeted,
                        description.empty() ? "targeted" : "targeted:" + description);
  f.target_ = x;
  return f;
}

Rational SeparatorEnumerator::eval(DigitView w) const {
  check_digits(w, base_);
  switch (kind_) {
    case EnumeratorKind::Canonical:
      return real_value(w, base_);
    case EnumeratorKind::BlockPermuted: {
      Digits padded(w.begin(), w.end());
      padded.resize((padded.size() + block_len_ - 1) / block_len_ * block_len_, 0);
      Digits mapped;
      mapped.reserve(padded.size());
      for (std::size_t i = 0; i < padded.size(); i += block_len_) {
        Digits block(padded.begin() + static_cast<std::ptrdiff_t>(i),
                     padded.begin() + static_cast<std::ptrdiff_t>(i + block_len_));
        const Digits& image = sigma_.at(block);
        mapped.insert(mapped.end(), image.begin(), image.end());
      }
      return real_value(mapped, base_);
    }
    case EnumeratorKind::Targeted: {
      bool zeros = !w.empty() && std::all_of(w.begin(), w.end(), [](Digit d) { return d == 0; });
      if (!zeros) return real_value(w, base_);
      if (w.size() > kMaxTargetExponent) {
        throw Error(ErrorCode::InvalidArgument,
                    "targeted enumerator input 0^" + std::to_string(w.size()) + " too long");
      }
      return target_->exact_value_up_to(std::size_t{1} << w.size());
    }
  }
  return Rational(0);
}

BlockPermutation read_permutation_file(const std::filesystem::path& path, unsigned base,
                                       std::size_t block_len) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open permutation file '" + path.string() + "'");
  BlockPermutation sigma;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto arrow = line.find("->");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (arrow == std::string::npos) {
      throw Error(ErrorCode::SyntaxError, path.string() + ":" + std::to_string(lineno) +
                                              ": expected 'block -> block'");
    }
    Digits from = parse_digits(trim(line.substr(0, arrow)), base);
    Digits to = parse_digits(trim(line.substr(arrow + 2)), base);
    if (from.size() != block_len) {
      throw Error(ErrorCode::InvalidPermutation,
                  path.string() + ":" + std::to_string(lineno) + ": block length mismatch");
    }
    if (!sigma.emplace(std::move(from), std::move(to)).second) {
      throw Error(ErrorCode::InvalidPermutation,
                  path.string() + ":" + std::to_string(lineno) + ": block listed twice");
    }
  }
  return sigma;
}

SeparatorEnumerator parse_enumerator(std::string_view spec, unsigned base) {
  if (spec == "canonical") return SeparatorEnumerator::canonical(base);
  if (spec.starts_with("blockperm:")) {
    std::string_view rest = spec.substr(10);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "expected blockperm:m:PERMFILE");
    }
    Integer m = parse_integer(rest.substr(0, colon));
    if (m < 1 || m > 16) throw Error(ErrorCode::InvalidPermutation, "block length out of range");
    std::size_t len = m.get_ui();
    return SeparatorEnumerator::block_permuted(
        base, len, read_permutation_file(std::string(rest.substr(colon + 1)), base, len));
  }
  if (spec.starts_with("targeted:")) {
    std::string_view target = spec.substr(9);
    return SeparatorEnumerator::targeted(DigitStream::open(parse_real_spec(target), base),
                                         std::string(target));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown enumerator '" + std::string(spec) +
                                              "' (expected canonical, blockperm:m:PERMFILE, "
                                              "targeted:SPEC)");
}

std::size_t default_max_input_len(unsigned base) {
  check_base(base);
  std::size_t len = 0;
  for (std::uint64_t p = base; p <= (std::uint64_t{1} << 20); p *= base) ++len;
  return len;
}

CostResult ktf_delta(const Fst& t, const SeparatorEnumerator& f, const DigitStream& x,
                     const Rational& delta, std::size_t max_input_len, std::size_t dedup_bound) {
  if (t.base() != f.alphabet_size() || t.base() != x.base()) {
    throw Error(ErrorCode::InvalidBase, "transducer, enumerator and real must share a base");
  }
  Endpoints ends = interval_endpoints(x, delta);

  struct Item {
    StateId state;
    Digits output;
    Digits input;
  };
  std::unordered_set<std::string> seen;
  auto fresh = [&](StateId q, const Digits& out) {
    if (out.size() >= dedup_bound) return true;
    std::string key(reinterpret_cast<const char*>(&q), sizeof q);
    key.append(out.begin(), out.end());
    return seen.insert(std::move(key)).second;
  };

  if (ends.contains(f.eval({}))) return {CostStatus::Found, 0, {}, {}};
  std::vector<Item> frontier{{t.start(), {}, {}}};
  fresh(t.start(), {});

  for (std::size_t len = 1; len <= max_input_len && !frontier.empty(); ++len) {
    std::vector<Item> next;
    for (const Item& item : frontier) {
      for (unsigned a = 0; a < t.base(); ++a) {
        const Edge& e = t.edge(item.state, static_cast<Digit>(a));
        Digits out = item.output;
        out.insert(out.end(), e.output.begin(), e.output.end());
        if (!fresh(e.next, out)) continue;
        Digits in = item.input;
        in.push_back(static_cast<Digit>(a));
        if (ends.contains(f.eval(out))) {
          return {CostStatus::Found, len, std::move(in), std::move(out)};
        }
        next.push_back({e.next, std::move(out), std::move(in)});
      }
    }
    frontier = std::move(next);
  }
  return {CostStatus::CapExceeded, 0, {}, {}};
}

namespace {

RowCost ktf_cost(const SeparatorEnumerator& f, const DigitStream& x, const ProfileCaps& caps) {
  std::size_t max_len = caps.cap_input ? *caps.cap_input : default_max_input_len(x.base());
  return [&f, x, max_len](const Fst& t, std::size_t n) {
    return ktf_delta(t, f, x, inverse_power(x.base(), n), max_len);
  };
}

}  // namespace

EstimateReport dimf_estimate(const Family& family, const SeparatorEnumerator& f,
                             const DigitStream& x, const EstimateOptions& opts) {
  return estimate_from_costs(family, opts, ktf_cost(f, x, opts.caps));
}

EstimateReport dimf_set_estimate(const Family& family, const SeparatorEnumerator& f,
                                 std::span<const DigitStream> xs, const EstimateOptions& opts) {
  std::vector<EstimateReport> points;
  for (const DigitStream& x : xs) {
    points.push_back(collect_estimate(family, opts, ktf_cost(f, x, opts.caps)));
  }
  return set_estimate_from_points(family, points, opts);
}

}  // namespace fsdim
