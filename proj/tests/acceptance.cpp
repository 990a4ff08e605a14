// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "progressio/classify.hpp"
#include "progressio/commands.hpp"
#include "progressio/constructors.hpp"
#include "progressio/numtheory.hpp"
#include "support.hpp"

using namespace progressio;
using spectra::SpectrumKind;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, std::string const& what) {
    if (!cond) {
      if (pass) detail << "; failed: ";
      else detail << ", ";
      detail << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, char const* title, double limit_seconds,
               std::function<void(Outcome&)> const& body) {
  Outcome out;
  auto const t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (std::exception const& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds));
  }
  if (!out.pass) ++failures;
  std::printf("%s  [%2d] %s (%.2f s%s)%s\n", out.pass ? "PASS" : "FAIL", id, title, secs,
              limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(limit_seconds)) + " s").c_str()
                                : "",
              out.detail.str().c_str());
  std::fflush(stdout);
}

Spectrum S(std::vector<std::uint64_t> v) { return Spectrum(std::move(v)); }

/// Constructed instances for the odd-order equivalence checks.
std::vector<support::NamedGroup> constructed_family(std::uint64_t frob_limit) {
  namespace c = constructors;
  std::vector<support::NamedGroup> out;
  for (std::uint64_t n = 1; n <= 199; n += 2) out.push_back({"C(" + std::to_string(n) + ")", c::cyclic(n)});
  for (std::uint64_t p : numtheory::primes_up_to(200)) {
    if (p == 2) continue;
    for (std::uint64_t k = 1, pk = p; pk <= 200; ++k, pk *= p)
      out.push_back({"ElemAb(" + std::to_string(p) + "," + std::to_string(k) + ")", c::elementary_abelian(p, k)});
  }
  for (std::uint64_t p : {3, 5}) {
    out.push_back({"Heis(" + std::to_string(p) + ")", c::heisenberg(p)});
    out.push_back({"ModMax(" + std::to_string(p) + ")", c::modular_maximal(p)});
  }
  auto const primes = numtheory::primes_up_to(frob_limit);
  for (std::uint64_t p : primes) {
    for (std::uint64_t q : primes) {
      if (p == 2 || q == 2 || p == q) continue;
      std::uint64_t const b = numtheory::multiplicative_order(p, q);
      std::uint64_t order = q;
      bool fits = true;
      for (std::uint64_t i = 0; i < b && fits; ++i) {
        order *= p;
        fits = order <= frob_limit;
      }
      if (!fits) continue;
      out.push_back({"Frob(" + std::to_string(p) + "," + std::to_string(q) + ")",
                     c::frobenius_field_action(p, q)});
    }
  }
  return out;
}

}  // namespace

int main() {
  std::printf("progressio acceptance suite\n");

  criterion(1, "order-75 Frobenius witness", 1.0, [](Outcome& o) {
    auto const g = constructors::frobenius_field_action(5, 3);
    o.require(g.order() == 75, "order 75");
    auto const pe = spectra::element_order_spectrum(g);
    o.require(pe == S({1, 3, 5}), "pi_e = {1,3,5}");
    auto const ap = is_arithmetic_progression(pe);
    o.require(ap.is_ap && ap.ratio == 2u, "AP with ratio 2");
    auto const d = classify::frobenius_decomposition(g);
    o.require(d.has_value(), "Frobenius decomposition exists");
    if (!d) return;
    o.require(d->kernel_order() == 25, "kernel order 25");
    o.require(d->complement_order() == 3, "complement order 3");
    o.require(is_abelian(g, d->kernel.mask), "kernel abelian");
    o.require(classify::has_prime_exponent(g, d->kernel.mask) && d->kernel_prime == 5u,
              "kernel exponent 5");
    std::vector<std::uint64_t> orders;
    d->kernel.mask.for_each([&](ElementId x) { orders.push_back(g.element_order(x)); });
    o.require(Spectrum(orders) ==
                  spectra::element_order_spectrum(constructors::elementary_abelian(5, 2)),
              "kernel spectrum equals that of C5 x C5");
  });

  auto const family = constructed_family(2000);

  criterion(2, "Theorem 1.1 equivalence on corpus and constructed families", 60.0, [&](Outcome& o) {
    std::size_t checked = 0, bad = 0, frob = 0;
    auto run = [&](support::NamedGroup const& ng) {
      if (ng.group.order() % 2 == 0) return;
      ++checked;
      if (!classify::theorem_1_1_verdict(ng.group).consistent) {
        ++bad;
        o.require(false, ng.name);
      }
    };
    for (auto const& ng : support::odd_groups()) run(ng);
    for (auto const& ng : family) {
      frob += ng.name.rfind("Frob", 0) == 0;
      run(ng);
    }
    o.detail << "; " << checked << " groups, " << frob << " Frobenius instances, " << bad
             << " inconsistent";
    o.require(frob >= 10, "at least 10 Frob(p,q) instances");
  });

  criterion(3, "Theorem 1.2 equivalence for pi_s and pi_as (order <= 600)", 120.0, [&](Outcome& o) {
    std::size_t checked = 0, bad = 0;
    auto run = [&](support::NamedGroup const& ng) {
      auto const& g = ng.group;
      if (g.order() % 2 == 0 || g.order() == 1 || g.order() > 600) return;
      auto const lattice = spectra::enumerate_subgroups(g, 600);
      for (auto kind : {SpectrumKind::Subgroup, SpectrumKind::AbelianSubgroup}) {
        ++checked;
        if (!classify::theorem_1_2_verdict(g, kind, lattice).consistent) {
          ++bad;
          o.require(false, ng.name + " (" + std::string(spectra::short_name(kind)) + ")");
        }
      }
    };
    for (auto const& ng : support::odd_groups()) run(ng);
    for (auto const& ng : family) run(ng);
    o.detail << "; " << checked << " verdicts, " << bad << " inconsistent";
  });

  criterion(4, "Theorem A spot checks (pi_e)", 0, [](Outcome& o) {
    auto pe = [](char const* n) { return spectra::element_order_spectrum(classify::reference_group(n)); };
    o.require(pe("A4") == S({1, 2, 3}), "A4");
    o.require(pe("A6") == Spectrum::consecutive(5), "A6");
    o.require(pe("S5") == Spectrum::consecutive(6), "S5");
    o.require(pe("S6") == Spectrum::consecutive(6), "S6");
    o.require(pe("A7") == Spectrum::consecutive(7), "A7");
  });

  criterion(5, "Theorem B spot checks (pi_s)", 0, [](Outcome& o) {
    auto ps = [](char const* n) { return spectra::subgroup_order_spectrum(classify::reference_group(n)); };
    for (char const* n : {"C2", "C3", "C5", "C7"}) o.require(ps(n) == S({1}), n);
    o.require(ps("C4") == S({1, 2}), "C4");
    o.require(ps("C2^2") == S({1, 2}), "C2^2");
    o.require(ps("S3") == S({1, 2, 3}), "S3");
    o.require(ps("C6") == S({1, 2, 3}), "C6");
    o.require(ps("A4") == S({1, 2, 3, 4}), "A4");
  });

  criterion(6, "Theorem C spot checks (pi_as)", 0, [](Outcome& o) {
    auto pas = [](char const* n) {
      return spectra::abelian_subgroup_order_spectrum(classify::reference_group(n));
    };
    o.require(pas("A4") == S({1, 2, 3, 4}), "A4");
    o.require(pas("S4") == S({1, 2, 3, 4}), "S4");
    auto const a5 = pas("A5");
    auto const s5 = pas("S5");
    o.require(a5.contains(5), "5 in pi_as(A5)");
    o.detail << "; discrepancy vs listed n=4: pi_as(A5) = {" << a5.render() << "}, pi_as(S5) = {"
             << s5.render() << "}";
  });

  criterion(7, "prime pairs (q, 2q-1): sieve and trial division agree to 10^6", 10.0, [](Outcome& o) {
    auto const sieve = numtheory::cunningham_pairs(1000000);
    auto const trial = oracle::cunningham_trial(1000000);
    o.require(sieve == trial, "methods agree");
    using P = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    o.require(sieve.size() >= 5 && P(sieve.begin(), sieve.begin() + 5) ==
                                       P{{3, 5}, {7, 13}, {19, 37}, {31, 61}, {37, 73}},
              "first five pairs");
    o.detail << "; " << sieve.size() << " pairs";
  });

  criterion(8, "subgroup lattice equals subset enumeration for corpus groups of order <= 16", 0,
            [](Outcome& o) {
              std::size_t n = 0;
              for (auto const* groups : {&support::odd_groups(), &support::reference_groups()}) {
                for (auto const& ng : *groups) {
                  if (ng.group.order() > 16) continue;
                  ++n;
                  std::set<std::uint32_t> got;
                  auto const lattice = spectra::enumerate_subgroups(ng.group);
                  for (auto const& e : lattice.entries()) {
                    std::uint32_t bits = 0;
                    e.mask().for_each([&](ElementId i) { bits |= 1u << i; });
                    got.insert(bits);
                  }
                  o.require(got == oracle::subgroups_by_subsets(ng.group), ng.name);
                }
              }
              o.detail << "; " << n << " groups";
            });

  criterion(9, "three-primes elimination scan and consecutive prime runs", 30.0, [](Outcome& o) {
    for (std::uint64_t m = 7; m <= 201; m += 2) {
      auto const s = numtheory::lemma21_case1_scan(m);
      bool ok = s.eliminated && s.witness;
      if (ok) {
        auto const [a, b, c] = *s.witness;
        ok = oracle::is_prime_trial(a) && oracle::is_prime_trial(b) && oracle::is_prime_trial(c) &&
             c <= m && a * b > m && a * c > m && b * c > m;
      }
      o.require(ok, "m=" + std::to_string(m));
    }
    for (std::uint64_t m : {1, 3, 5}) o.require(!numtheory::lemma21_case1_scan(m).eliminated, "m<=5 kept");
    auto const m39 = numtheory::lemma21_case1_scan(39);
    o.require(m39.witness == std::array<std::uint64_t, 3>{29, 31, 37}, "m=39 witness (29,31,37)");
    for (std::uint64_t r = 2; r <= 30; r += 2) {
      auto const bound = numtheory::consecutive_prime_bound(r);
      for (std::uint64_t a : numtheory::primes_up_to(10000))
        if (numtheory::prime_run_length(a, r) > bound)
          o.require(false, "run from " + std::to_string(a) + " ratio " + std::to_string(r));
    }
  });

  criterion(10, "three primes lemma holds on applicable corpus groups", 0, [](Outcome& o) {
    std::size_t applicable = 0;
    for (auto const* groups : {&support::odd_groups(), &support::reference_groups()}) {
      for (auto const& ng : *groups) {
        auto const r = classify::lucido_check(ng.group);
        if (!r.applicable) continue;
        ++applicable;
        o.require(r.holds, ng.name);
      }
    }
    o.require(applicable >= 5, "at least 5 applicable groups");
    o.detail << "; " << applicable << " applicable";
  });

  criterion(11, "normal-subgroup AP scan over the corpus", 0, [](Outcome& o) {
    auto cat = support::odd_catalog();
    auto const& ref = support::reference_catalog();
    cat.insert(cat.end(), ref.begin(), ref.end());
    auto const r = harness::cmd_scan_open_problem(cat, "odd.cat + reference.cat", {});
    o.require(r.exit_code == harness::kExitOk, "exit code 0");
    std::size_t ap = 0;
    bool a4 = false, c15 = false;
    for (auto const& rec : r.records) {
      ap += rec.find(",ap,") != std::string::npos;
      a4 |= rec == "A4,12,ns,1|4,3,ap,n/a";
      c15 |= rec == "C15,15,ns,1|3|5,2,ap,n/a";
    }
    o.require(a4, "A4 listed with {1,4} ratio 3");
    o.require(c15, "C15 listed with {1,3,5}");
    o.require(r.records.size() == cat.size(), "one row per group");
    o.detail << "; " << ap << " of " << cat.size() << " groups have an AP";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
