#include "dedekind/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

std::uint64_t checked_candidate(std::uint64_t a1, std::uint64_t t, std::uint64_t j) {
  std::uint64_t tj = 0;
  std::uint64_t a = 0;
  if (__builtin_mul_overflow(t, j, &tj) || __builtin_add_overflow(a1, tj, &a)) {
    throw std::overflow_error("candidate a = a1 + t j overflows 64 bits");
  }
  return a;
}

// Numerators q S(a, b) for b = q(a^2+1)/t along one RootPair. The t-side sum
// S(a q, t) depends only on a1 q mod t and the q-side sums come from a shared
// table, so each candidate costs a handful of integer operations.
class PairEvaluator {
 public:
  PairEvaluator(std::uint64_t q, const ResidueSumTable& q_sums, const RootPair& pair)
      : q_(q), t_(pair.t), a1_(pair.a1), q_sums_(q_sums) {
    const Integer qz = to_integer(q);
    const Integer tz = to_integer(pair.t);
    t_star_ = mod_inverse(tz, qz).get_ui();
    const Rational t_side = dedekind_sum(to_integer(pair.a1) * qz, tz);
    q_times_t_side_ = qz * Rational(t_side * tz).get_num();
    q2_minus_1_ = qz * qz - 1;
  }

  std::uint64_t t() const { return t_; }

  // Candidate a for j, or 0 when the j is skipped.
  std::uint64_t candidate(std::uint64_t j) const {
    const std::uint64_t a = checked_candidate(a1_, t_, j);
    if (a == 0 || std::gcd(a % q_, q_) != 1) {
      return 0;
    }
    return a;
  }

  // q S(a, b) = ((q^2-1) a - q t S(aq, t)) / t + q S(a t*, q)
  void numerator(std::uint64_t a, Integer& out) const {
    out = q2_minus_1_ * to_integer(a);
    out -= q_times_t_side_;
    if (!mpz_divisible_ui_p(out.get_mpz_t(), t_)) {
      throw std::logic_error("PairEvaluator: inexact division by t");
    }
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), t_);
    const std::uint64_t r = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a % q_) * t_star_ % q_);
    out += q_sums_.scaled(r);
  }

 private:
  std::uint64_t q_;
  std::uint64_t t_;
  std::uint64_t a1_;
  std::uint64_t t_star_ = 0;
  const ResidueSumTable& q_sums_;
  Integer q_times_t_side_;
  Integer q2_minus_1_;
};

Witness make_witness(std::uint64_t q, std::uint64_t t, std::uint64_t a,
                     const Integer& numerator) {
  Witness w;
  w.q = q;
  w.t = t;
  w.a = to_integer(a);
  w.b = to_integer(q) * (w.a * w.a + 1) / to_integer(t);
  w.value = make_rational(numerator, to_integer(q));
  const SignedClass cls = normalize(numerator, q);
  w.class_k = cls.rep.k;
  w.sign = cls.sign;
  return w;
}

std::vector<std::uint64_t> roots_if_coprime(std::uint64_t t, std::uint64_t q) {
  if (std::gcd(t, q) != 1) {
    return {};
  }
  return sqrt_minus_one(t);
}

// Shared per-search state that does not change during the run.
struct SearchContext {
  std::uint64_t q;
  std::uint64_t modulus;
  ResidueSumTable q_sums;
  // admissible[k] for 1 <= k <= M/2
  std::vector<char> admissible;
  std::uint64_t predicted = 0;

  explicit SearchContext(std::uint64_t q_in)
      : q(q_in), modulus(class_modulus(q_in)), q_sums(q_in) {
    admissible.assign(modulus / 2 + 1, 0);
    for (const ClassRep& c : admissible_classes(q)) {
      admissible[c.k] = 1;
      ++predicted;
    }
  }

  void require_admissible(std::uint64_t k) const {
    if (k >= admissible.size() || !admissible[k]) {
      throw std::logic_error("search produced the inadmissible class " + std::to_string(k) +
                             " for q = " + std::to_string(q));
    }
  }
};

CoverageReport empty_report(const SearchContext& ctx) {
  CoverageReport report;
  report.q = ctx.q;
  report.modulus = ctx.modulus;
  report.predicted = ctx.predicted;
  report.complete = ctx.predicted == 0;
  return report;
}

CoverageReport run_sequential(const SearchConfig& config, const SearchContext& ctx) {
  CoverageReport report = empty_report(ctx);
  if (report.complete) {
    return report;
  }
  const std::uint64_t q = ctx.q;
  Integer numerator;
  RootPairStream stream(q, config.max_t);
  while (auto pair = stream.next()) {
    const PairEvaluator eval(q, ctx.q_sums, *pair);
    for (std::uint64_t j = 0; j < q; ++j) {
      const std::uint64_t a = eval.candidate(j);
      if (a == 0) {
        continue;
      }
      if (report.sums_computed >= config.max_sums) {
        return report;
      }
      ++report.sums_computed;
      report.max_t_reached = pair->t;
      eval.numerator(a, numerator);
      const std::uint64_t k = normalize(numerator, q).rep.k;
      if (report.witnesses.contains(k)) {
        continue;
      }
      ctx.require_admissible(k);
      report.witnesses.emplace(k, make_witness(q, pair->t, a, numerator));
      if (report.witnesses.size() == ctx.predicted) {
        report.complete = true;
        return report;
      }
    }
  }
  return report;
}

// Parallel evaluation of consecutive t ranges, merged in (t, a1, j) order so
// the result equals run_sequential exactly.
CoverageReport run_batched(const SearchConfig& config, const SearchContext& ctx) {
  CoverageReport report = empty_report(ctx);
  if (report.complete) {
    return report;
  }
  const std::uint64_t q = ctx.q;
  const unsigned jobs = std::max(1u, config.jobs);
  const std::uint64_t batch_size = 256ULL * jobs;

  struct Hit {
    std::uint64_t ordinal;  // position among the candidates of this t
    std::uint64_t class_k;
    std::uint64_t a;
    Integer numerator;
  };
  struct Slot {
    std::uint64_t count = 0;
    std::vector<Hit> hits;
  };

  std::vector<char> found(ctx.admissible.size(), 0);
  for (std::uint64_t first = 1; first <= config.max_t; first += batch_size) {
    const std::uint64_t last = std::min(config.max_t, first + batch_size - 1);
    std::vector<Slot> slots(last - first + 1);
    std::atomic<std::uint64_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
      try {
        Integer numerator;
        for (std::uint64_t i = cursor++; i < slots.size(); i = cursor++) {
          const std::uint64_t t = first + i;
          Slot& slot = slots[i];
          // Hits are kept only for classes unknown at batch start; the merge
          // discards the ones an earlier candidate already covered.
          for (std::uint64_t a1 : roots_if_coprime(t, q)) {
            const PairEvaluator eval(q, ctx.q_sums, RootPair{t, a1});
            for (std::uint64_t j = 0; j < q; ++j) {
              const std::uint64_t a = eval.candidate(j);
              if (a == 0) continue;
              const std::uint64_t ordinal = slot.count++;
              eval.numerator(a, numerator);
              const std::uint64_t k = normalize(numerator, q).rep.k;
              if (k < found.size() && found[k]) continue;
              slot.hits.push_back(Hit{ordinal, k, a, numerator});
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
      worker();
    }
    if (failure) std::rethrow_exception(failure);

    for (std::uint64_t i = 0; i < slots.size(); ++i) {
      const std::uint64_t t = first + i;
      const Slot& slot = slots[i];
      if (slot.count == 0) continue;
      const std::uint64_t before = report.sums_computed;
      if (before >= config.max_sums) {
        return report;
      }
      for (const Hit& hit : slot.hits) {
        if (before + hit.ordinal >= config.max_sums) break;
        if (found[hit.class_k]) continue;
        ctx.require_admissible(hit.class_k);
        found[hit.class_k] = 1;
        report.witnesses.emplace(hit.class_k, make_witness(q, t, hit.a, hit.numerator));
        if (report.witnesses.size() == ctx.predicted) {
          report.sums_computed = before + hit.ordinal + 1;
          report.max_t_reached = t;
          report.complete = true;
          return report;
        }
      }
      report.sums_computed = std::min(config.max_sums, before + slot.count);
      report.max_t_reached = t;
      if (report.sums_computed >= config.max_sums) {
        return report;
      }
    }
  }
  return report;
}

// Workers claim t values from a shared counter and publish into an
// insert-only found set. Witness choice depends on scheduling.
CoverageReport run_racing(const SearchConfig& config, const SearchContext& ctx) {
  CoverageReport report = empty_report(ctx);
  if (report.complete) {
    return report;
  }
  const std::uint64_t q = ctx.q;
  const unsigned jobs = std::max(1u, config.jobs);

  std::vector<std::atomic<bool>> found(ctx.admissible.size());
  std::atomic<std::uint64_t> next_t{1};
  std::atomic<std::uint64_t> sums{0};
  std::atomic<std::uint64_t> found_count{0};
  std::atomic<std::uint64_t> max_t_reached{0};
  std::atomic<bool> stop{false};
  std::mutex witness_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      Integer numerator;
      while (!stop.load(std::memory_order_relaxed)) {
        const std::uint64_t t = next_t.fetch_add(1);
        if (t > config.max_t) break;
        for (std::uint64_t a1 : roots_if_coprime(t, q)) {
          const PairEvaluator eval(q, ctx.q_sums, RootPair{t, a1});
          for (std::uint64_t j = 0; j < q; ++j) {
            if (stop.load(std::memory_order_relaxed)) return;
            const std::uint64_t a = eval.candidate(j);
            if (a == 0) continue;
            if (sums.fetch_add(1) >= config.max_sums) {
              stop = true;
              return;
            }
            std::uint64_t seen = max_t_reached.load();
            while (seen < t && !max_t_reached.compare_exchange_weak(seen, t)) {
            }
            eval.numerator(a, numerator);
            const std::uint64_t k = normalize(numerator, q).rep.k;
            if (k >= found.size() || found[k].load(std::memory_order_relaxed)) continue;
            ctx.require_admissible(k);
            if (found[k].exchange(true)) continue;
            {
              std::lock_guard lock(witness_mutex);
              report.witnesses.emplace(k, make_witness(q, t, a, numerator));
            }
            if (found_count.fetch_add(1) + 1 == ctx.predicted) {
              stop = true;
              return;
            }
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(witness_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  report.sums_computed = std::min(sums.load(), config.max_sums);
  report.max_t_reached = max_t_reached.load();
  report.complete = report.witnesses.size() == ctx.predicted;
  return report;
}

}  // namespace

std::vector<std::uint64_t> CoverageReport::found() const {
  std::vector<std::uint64_t> out;
  out.reserve(witnesses.size());
  for (const auto& [k, w] : witnesses) out.push_back(k);
  return out;
}

RootPairStream::RootPairStream(std::uint64_t q, std::uint64_t max_t) : q_(q), max_t_(max_t) {
  if (q < 2) {
    throw PreconditionViolated("enumerate_root_pairs: q must be >= 2");
  }
}

std::optional<RootPair> RootPairStream::next() {
  while (true) {
    if (index_ < roots_.size()) {
      return RootPair{t_, roots_[index_++]};
    }
    if (t_ >= max_t_) {
      return std::nullopt;
    }
    ++t_;
    index_ = 0;
    roots_ = roots_if_coprime(t_, q_);
  }
}

std::vector<RootPair> enumerate_root_pairs(std::uint64_t q, std::uint64_t max_t) {
  std::vector<RootPair> out;
  RootPairStream stream(q, max_t);
  while (auto pair = stream.next()) out.push_back(*pair);
  return out;
}

std::vector<Witness> candidates_for_pair(std::uint64_t q, const RootPair& pair) {
  if (q < 2) {
    throw PreconditionViolated("candidates_for_pair: q must be >= 2");
  }
  if (pair.t == 0 || std::gcd(pair.t, q) != 1) {
    throw PreconditionViolated("candidates_for_pair: gcd(t, q) != 1");
  }
  const Integer qz = to_integer(q);
  const Integer tz = to_integer(pair.t);
  std::vector<Witness> out;
  for (std::uint64_t j = 0; j < q; ++j) {
    const std::uint64_t a = checked_candidate(pair.a1, pair.t, j);
    if (a == 0 || std::gcd(a, q) != 1) {
      continue;
    }
    const Integer az = to_integer(a);
    const Rational value = dedekind_sum_decomposed(qz, tz, az);
    Witness w = make_witness(q, pair.t, a, value.get_num());
    if (w.value != value) {
      throw std::logic_error("candidates_for_pair: denominator of S(a, b) is not q");
    }
    out.push_back(std::move(w));
  }
  return out;
}

CoverageReport run_search(const SearchConfig& config) {
  if (config.max_sums < 1 || config.max_t < 1) {
    throw PreconditionViolated("run_search: max_sums and max_t must be >= 1");
  }
  const SearchContext ctx(config.q);
  if (config.jobs <= 1) {
    return run_sequential(config, ctx);
  }
  if (config.deterministic) {
    return run_batched(config, ctx);
  }
  return run_racing(config, ctx);
}

Witness shift_witness(const Witness& w, const Integer& m) {
  Witness out = w;
  const Integer q = to_integer(w.q);
  const Integer t = to_integer(w.t);
  out.a = w.a + m * t * q;
  out.b = q * (out.a * out.a + 1) / t;
  out.value = w.value + Rational((q * q - 1) * m);
  return out;
}

Witness with_positive_a(const Witness& w) {
  if (w.a >= 1) {
    return w;
  }
  Witness out = w;
  out.a = -w.a;
  out.value = -w.value;
  const SignedClass cls = normalize(out.value.get_num(), w.q);
  out.class_k = cls.rep.k;
  out.sign = cls.sign;
  return out;
}

VerifyResult verify_witness(const Witness& w, bool strict_congruences) {
  const std::string where = "witness class_k=" + std::to_string(w.class_k) + " (t=" +
                            std::to_string(w.t) + ", a=" + w.a.get_str() + "): ";
  auto fail = [&](const std::string& why) { return VerifyResult{false, where + why}; };
  try {
    if (w.q < 2) return fail("q must be >= 2");
    if (w.t < 1) return fail("t must be >= 1");
    const Integer q = to_integer(w.q);
    const Integer t = to_integer(w.t);
    if (gcd(t, q) != 1) return fail("gcd(t, q) != 1");
    if (w.a == 0) return fail("a must be nonzero");
    if (gcd(w.a, q) != 1) return fail("gcd(a, q) != 1");
    const Integer a2p1 = w.a * w.a + 1;
    if (!mpz_divisible_p(a2p1.get_mpz_t(), t.get_mpz_t())) return fail("t does not divide a^2+1");
    if (w.b != q * a2p1 / t) return fail("b != q(a^2+1)/t");
    if (gcd(w.a, w.b) != 1) return fail("gcd(a, b) != 1");
    if (w.value.get_den() != q) return fail("denominator of value is not q");
    if (dedekind_sum_decomposed(q, t, w.a) != w.value) return fail("value disagrees with the t/q decomposition");
    if (dedekind_sum(w.a, w.b) != w.value) return fail("value disagrees with the reciprocity evaluation");
    if (w.b <= kDirectSumLimit && dedekind_sum_direct(w.a, w.b) != w.value) {
      return fail("value disagrees with the defining sum");
    }
    const SignedClass cls = normalize(w.value.get_num(), w.q);
    if (cls.rep.k != w.class_k) return fail("numerator is not in class " + std::to_string(w.class_k));
    if (cls.sign != w.sign && !cls.rep.self_paired) return fail("sign does not match the numerator");
    if (w.sign != 1 && w.sign != -1) return fail("sign must be +1 or -1");
    if (!admissible(to_integer(w.class_k), w.q)) return fail("class is not admissible");
    if (strict_congruences) {
      if (!admissible(w.value.get_num(), w.q)) return fail("numerator violates the congruence conditions");
      if (mpz_odd_p(w.b.get_mpz_t()) && !dedekind_congruence_holds(w.a, w.b)) {
        return fail("Dedekind's mod-8 congruence fails");
      }
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return {};
}

VerifyResult verify_report(const CoverageReport& report, bool strict_congruences) {
  if (report.q < 2) {
    if (report.witnesses.empty()) return {};
    return {false, "report: q must be >= 2"};
  }
  try {
    if (report.modulus != class_modulus(report.q)) return {false, "report: modulus != (q^2-1)q"};
    if (report.predicted != class_count(report.q)) return {false, "report: predicted class count is wrong"};
  } catch (const std::exception& e) {
    return {false, std::string("report: ") + e.what()};
  }
  if (report.witnesses.size() > report.predicted) return {false, "report: more classes found than predicted"};
  if (report.complete != (report.witnesses.size() == report.predicted)) {
    return {false, "report: complete flag disagrees with the found count"};
  }
  for (const auto& [k, w] : report.witnesses) {
    if (w.class_k != k) return {false, "report: witness filed under class " + std::to_string(k) + " claims class " + std::to_string(w.class_k)};
    if (w.q != report.q) return {false, "report: witness for class " + std::to_string(k) + " has q=" + std::to_string(w.q)};
    if (auto r = verify_witness(w, strict_congruences); !r) return r;
  }
  return {};
}

}  // namespace dedekind
