#include "progressio/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "progressio/classify.hpp"
#include "progressio/error.hpp"
#include "progressio/numtheory.hpp"

namespace progressio::harness {

namespace {

using spectra::SpectrumKind;

constexpr char const* kCorpusCaveat =
    "# note: the corpus is hand-assembled from the published classification of small "
    "groups; this tool does not prove it complete";

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string ratio_field(APResult const& ap) {
  if (!ap.is_ap || !ap.ratio) return "none";
  return std::to_string(*ap.ratio);
}

std::string ap_text(APResult const& ap) {
  if (!ap.is_ap) return "not ap";
  if (!ap.ratio) return "ap";
  return "ap ratio=" + std::to_string(*ap.ratio);
}

/// Runs f(i) for i in [0, n) on up to `jobs` threads; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, std::size_t jobs, std::function<T(std::size_t)> f) {
  std::vector<T> out(n);
  if (jobs == 0) jobs = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(n, 1));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto const& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string render_table(std::vector<std::string> const& header,
                         std::vector<std::vector<std::string>> const& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (auto const& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  auto line = [&](std::vector<std::string> const& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += cells[c];
      if (c + 1 < cells.size()) out += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (auto const& r : rows) out += line(r);
  return out;
}

std::vector<std::string> table_cells(ReportRow const& r) {
  return {r.name, r.order, r.set, r.spectrum, r.ratio, r.structure, r.consistent};
}

std::vector<std::string> const kRowHeader{"name",  "order",     "set",       "spectrum",
                                          "ratio", "structure", "consistent"};

ReportRow verdict_row(std::string const& name, std::size_t order,
                      classify::ClassificationVerdict const& v) {
  return {name,
          std::to_string(order),
          std::string(spectra::short_name(v.spectrum_used)),
          v.spectrum.render("|"),
          ratio_field(v.ap),
          v.structure_description,
          yes_no(v.consistent)};
}

ReportRow skipped_row(std::string const& name, std::string const& order, std::string const& set,
                      std::string const& why) {
  return {name, order, set, "", "none", why, "skipped"};
}

struct Tally {
  std::size_t checked = 0;
  std::size_t inconsistent = 0;
  std::size_t skipped = 0;
  std::size_t cap_skipped = 0;
};

Tally tally(std::vector<ReportRow> const& rows) {
  Tally t;
  for (auto const& r : rows) {
    if (r.consistent == "yes") ++t.checked;
    if (r.consistent == "no") {
      ++t.checked;
      ++t.inconsistent;
    }
    if (r.consistent == "skipped") {
      ++t.skipped;
      if (r.structure.rfind("cap exceeded", 0) == 0) ++t.cap_skipped;
    }
  }
  return t;
}

/// Builds the group, or explains in a skipped row why it could not.
std::optional<FiniteGroup> try_build(CatalogEntry const& e, RunOptions const& opts,
                                     std::string const& set, std::vector<ReportRow>& rows) {
  try {
    return build_entry(e, opts.closure_cap);
  } catch (CapExceeded const& err) {
    rows.push_back(skipped_row(e.name, "?", set, "cap exceeded: " + std::string(err.what())));
  }
  return std::nullopt;
}

std::vector<ReportRow> verify_1_1(CatalogEntry const& e, RunOptions const& opts) {
  std::vector<ReportRow> rows;
  auto g = try_build(e, opts, "e", rows);
  if (!g) return rows;
  if (g->order() % 2 == 0) {
    rows.push_back(skipped_row(e.name, std::to_string(g->order()), "e", "even order"));
    return rows;
  }
  rows.push_back(verdict_row(e.name, g->order(), classify::theorem_1_1_verdict(*g)));
  return rows;
}

std::vector<ReportRow> verify_1_2(CatalogEntry const& e, RunOptions const& opts) {
  std::vector<ReportRow> rows;
  auto g = try_build(e, opts, "s", rows);
  if (!g) return rows;
  std::string const order = std::to_string(g->order());
  if (g->order() % 2 == 0 || g->order() == 1) {
    std::string why = g->order() == 1 ? "trivial group" : "even order";
    rows.push_back(skipped_row(e.name, order, "s", why));
    rows.push_back(skipped_row(e.name, order, "as", why));
    return rows;
  }
  if (g->order() > opts.subgroup_cap) {
    std::string why = "cap exceeded: order " + order + " above subgroup cap " +
                      std::to_string(opts.subgroup_cap);
    rows.push_back(skipped_row(e.name, order, "s", why));
    rows.push_back(skipped_row(e.name, order, "as", why));
    return rows;
  }
  auto const lattice = spectra::enumerate_subgroups(*g, opts.subgroup_cap);
  for (auto kind : {SpectrumKind::Subgroup, SpectrumKind::AbelianSubgroup})
    rows.push_back(verdict_row(e.name, g->order(), classify::theorem_1_2_verdict(*g, kind, lattice)));
  return rows;
}

std::vector<ReportRow> verify_1_3(CatalogEntry const& e, RunOptions const& opts) {
  std::vector<ReportRow> rows;
  auto g = try_build(e, opts, "e", rows);
  if (!g) return rows;
  std::string const order = std::to_string(g->order());
  Spectrum const pe = spectra::element_order_spectrum(*g);
  if (g->order() % 2 == 0) {
    rows.push_back(skipped_row(e.name, order, "e", "even order"));
    return rows;
  }
  if (!classify::is_cp1(*g)) {
    rows.push_back(skipped_row(e.name, order, "e", "not CP1"));
    return rows;
  }
  bool const exp_p = classify::is_p_group_of_exponent_p(*g);
  auto const d = classify::frobenius_decomposition(*g);
  bool frob = false;
  std::string desc;
  if (d && d->kernel_prime && numtheory::is_prime(d->complement_order()) &&
      classify::has_prime_exponent(*g, d->kernel.mask)) {
    // kernel order p^n must be a power of p^b, b the order of p mod q
    std::uint64_t const p = *d->kernel_prime;
    std::uint64_t const b = numtheory::multiplicative_order(p, d->complement_order());
    std::uint64_t layer = 1;
    for (std::uint64_t i = 0; i < b; ++i) layer *= p;
    std::uint64_t n = d->kernel_order();
    while (n % layer == 0 && n > 1) n /= layer;
    frob = n == 1;
    desc = "Frobenius [" + std::to_string(d->kernel_order()) + "]" +
           std::to_string(d->complement_order()) + " layer p^b=" + std::to_string(layer);
    if (!frob) desc += " does not divide kernel order";
  }
  if (exp_p) desc = g->order() == 1 ? "trivial group" : "p-group of exponent p";
  if (exp_p == frob) desc += exp_p ? " and Frobenius" : "neither branch";
  rows.push_back({e.name, order, "e", pe.render("|"), ratio_field(is_arithmetic_progression(pe)),
                  desc, yes_no(exp_p != frob)});
  return rows;
}

std::vector<ReportRow> verify_1_4(CatalogEntry const& e, RunOptions const& opts) {
  std::vector<ReportRow> rows;
  auto g = try_build(e, opts, "s", rows);
  if (!g) return rows;
  std::string const order = std::to_string(g->order());
  if (g->order() % 2 == 0) {
    rows.push_back(skipped_row(e.name, order, "s", "even order"));
    return rows;
  }
  if (g->order() > opts.subgroup_cap) {
    rows.push_back(skipped_row(e.name, order, "s",
                               "cap exceeded: order " + order + " above subgroup cap " +
                                   std::to_string(opts.subgroup_cap)));
    return rows;
  }
  auto const lattice = spectra::enumerate_subgroups(*g, opts.subgroup_cap);
  bool const mnc = classify::is_minimal_noncyclic(*g, lattice);
  std::string listed;
  bool const in_list = classify::matches_minimal_noncyclic_list(*g, &listed);
  std::string desc = mnc ? "minimal non-cyclic" : "not minimal non-cyclic";
  if (in_list) desc += "; " + listed;
  Spectrum const ps = spectra::subgroup_order_spectrum(lattice);
  rows.push_back({e.name, order, "s", ps.render("|"), ratio_field(is_arithmetic_progression(ps)),
                  desc, yes_no(mnc == in_list)});
  return rows;
}

std::vector<ReportRow> verify_lucido(CatalogEntry const& e, RunOptions const& opts) {
  std::vector<ReportRow> rows;
  auto g = try_build(e, opts, "e", rows);
  if (!g) return rows;
  std::string const order = std::to_string(g->order());
  auto const r = classify::lucido_check(*g);
  Spectrum const pe = spectra::element_order_spectrum(*g);
  if (!r.applicable) {
    rows.push_back(skipped_row(e.name, order, "e", "not applicable"));
    rows.back().spectrum = pe.render("|");
    return rows;
  }
  std::string desc = r.holds ? "witness order " + std::to_string(*r.witness)
                             : "no product of two primes among element orders";
  rows.push_back({e.name, order, "e", pe.render("|"), ratio_field(is_arithmetic_progression(pe)),
                  desc, yes_no(r.holds)});
  return rows;
}

std::string summary_line(Tally const& t) {
  return "summary: checked " + std::to_string(t.checked) + ", inconsistent " +
         std::to_string(t.inconsistent) + ", skipped " + std::to_string(t.skipped) + "\n";
}

int exit_for(Tally const& t) {
  if (t.inconsistent) return kExitInconsistent;
  if (t.checked == 0 && t.cap_skipped > 0) return kExitCapExceeded;
  return kExitOk;
}

}  // namespace

std::string ReportRow::to_csv() const {
  return name + "," + order + "," + set + "," + spectrum + "," + ratio + "," + structure + "," +
         consistent;
}

std::string CommandResult::csv() const {
  std::string out;
  for (auto const& r : records) out += r + "\n";
  return out;
}

CatalogEntry resolve_group_ref(std::string const& ref, std::vector<CatalogEntry> const* catalog) {
  if (catalog) {
    for (auto const& e : *catalog)
      if (e.name == ref) return e;
  }
  CatalogEntry e;
  e.source = parse_group_expr(ref);
  e.name = render(std::get<GroupExpr>(e.source));
  return e;
}

CommandResult cmd_spectra(CatalogEntry const& group, std::vector<SpectrumKind> const& sets,
                          RunOptions const& opts) {
  CommandResult res;
  FiniteGroup const g = build_entry(group, opts.closure_cap);
  res.text = group.name + " order " + std::to_string(g.order()) + "\n";
  std::optional<spectra::SubgroupLattice> lattice;
  for (auto kind : sets) {
    Spectrum const s = spectra::compute(g, kind, opts.subgroup_cap, &lattice);
    APResult const ap = is_arithmetic_progression(s);
    res.text += std::string(spectra::short_name(kind)) + ": " + s.render() + "  [" +
                ap_text(ap) + "]\n";
    ReportRow row{group.name, std::to_string(g.order()), std::string(spectra::short_name(kind)),
                  s.render("|"), ratio_field(ap), "-", "n/a"};
    res.records.push_back(row.to_csv());
  }
  return res;
}

CommandResult cmd_classify(CatalogEntry const& group, RunOptions const& opts) {
  CommandResult res;
  FiniteGroup const g = build_entry(group, opts.closure_cap);
  std::string& t = res.text;
  std::string const order = std::to_string(g.order());
  t += "group: " + group.name + "\n";
  t += "source: " + describe_source(group) + "\n";
  t += "order: " + order + "\n";
  t += "abelian: " + yes_no(is_abelian(g)) + "\n";
  t += "cyclic: " + yes_no(is_cyclic(g)) + "\n";
  t += "solvable: " + yes_no(is_solvable(g)) + "\n";
  t += "cp1: " + yes_no(classify::is_cp1(g)) + "\n";
  t += "p-group of exponent p: " + yes_no(classify::is_p_group_of_exponent_p(g)) + "\n";
  Spectrum const pe = spectra::element_order_spectrum(g);
  t += "e: " + pe.render() + "  [" + ap_text(is_arithmetic_progression(pe)) + "]\n";

  std::optional<spectra::SubgroupLattice> lattice;
  if (g.order() <= opts.subgroup_cap) {
    lattice.emplace(spectra::enumerate_subgroups(g, opts.subgroup_cap));
    for (auto kind : {SpectrumKind::Subgroup, SpectrumKind::AbelianSubgroup,
                      SpectrumKind::NormalSubgroup}) {
      Spectrum const s = spectra::compute(g, kind, opts.subgroup_cap, &lattice);
      t += std::string(spectra::short_name(kind)) + ": " + s.render() + "  [" +
           ap_text(is_arithmetic_progression(s)) + "]\n";
    }
    t += "subgroups: " + std::to_string(lattice->size()) + "\n";
    t += "minimal non-cyclic: " + yes_no(classify::is_minimal_noncyclic(g, *lattice)) + "\n";
  } else {
    t += "subgroup spectra: skipped (order above subgroup cap " +
         std::to_string(opts.subgroup_cap) + ")\n";
  }

  if (auto d = classify::frobenius_decomposition(g)) {
    t += "frobenius: kernel " + std::to_string(d->kernel_order()) + " complement " +
         std::to_string(d->complement_order()) + "\n";
  } else {
    t += "frobenius: no\n";
  }

  auto const luc = classify::lucido_check(g);
  if (!luc.applicable) {
    t += "three primes check: not applicable\n";
  } else {
    t += "three primes check: " + std::string(luc.holds ? "holds" : "FAILS") +
         (luc.witness ? " (witness " + std::to_string(*luc.witness) + ")" : "") + "\n";
    if (!luc.holds) res.exit_code = kExitInconsistent;
  }

  if (g.order() % 2 == 1) {
    auto const v = classify::theorem_1_1_verdict(g);
    t += "theorem 1.1: ap=" + yes_no(v.ap.is_ap) + " structure=" + yes_no(v.structure_match) +
         " consistent=" + yes_no(v.consistent) + " (" + v.structure_description + ")\n";
    res.records.push_back(verdict_row(group.name, g.order(), v).to_csv());
    if (!v.consistent) res.exit_code = kExitInconsistent;
    if (lattice && g.order() > 1) {
      for (auto kind : {SpectrumKind::Subgroup, SpectrumKind::AbelianSubgroup}) {
        auto const w = classify::theorem_1_2_verdict(g, kind, *lattice);
        t += "theorem 1.2 (" + std::string(spectra::short_name(kind)) +
             "): ap=" + yes_no(w.ap.is_ap) + " structure=" + yes_no(w.structure_match) +
             " consistent=" + yes_no(w.consistent) + " (" + w.structure_description + ")\n";
        res.records.push_back(verdict_row(group.name, g.order(), w).to_csv());
        if (!w.consistent) res.exit_code = kExitInconsistent;
      }
    }
  } else {
    t += "theorem 1.1 / 1.2: not applicable (even order)\n";
  }
  return res;
}

CommandResult cmd_verify(std::string const& theorem, std::vector<CatalogEntry> const& corpus,
                         std::string const& corpus_label, RunOptions const& opts) {
  using Check = std::vector<ReportRow> (*)(CatalogEntry const&, RunOptions const&);
  Check check = nullptr;
  std::string title;
  if (theorem == "1.1") {
    check = verify_1_1;
    title = "pi_e(G) is an AP iff G is an exponent-p p-group or Frobenius [P]Q with |Q|=q and p=2q-1 or q=2p-1";
  } else if (theorem == "1.2") {
    check = verify_1_2;
    title = "pi_s(G) or pi_as(G) is an AP iff G is C_p x C_p or cyclic of order p or p^2 or pq with p=2q-1 or q=2p-1";
  } else if (theorem == "1.3") {
    check = verify_1_3;
    title = "odd-order CP1 groups are exactly one of: exponent-p p-group or Frobenius with prime complement and kernel a power of p^b";
  } else if (theorem == "1.4") {
    check = verify_1_4;
    title = "minimal non-cyclic groups are C_p x C_p, Q8 or C_p x| C_(q^m) with the generator acting with order q";
  } else if (theorem == "lucido") {
    check = verify_lucido;
    title = "solvable groups with three prime divisors have an element whose order is a product of two of them";
  } else if (theorem == "A" || theorem == "B" || theorem == "C" || theorem == "ABC") {
    return cmd_spot_checks(theorem, opts);
  } else {
    throw PreconditionError("unknown theorem '" + theorem +
                            "' (expected 1.1, 1.2, 1.3, 1.4, lucido, A, B, C or ABC)");
  }

  auto per_entry = parallel_map<std::vector<ReportRow>>(
      corpus.size(), opts.jobs, [&](std::size_t i) { return check(corpus[i], opts); });
  std::vector<ReportRow> rows;
  for (auto& batch : per_entry)
    for (auto& r : batch) rows.push_back(std::move(r));

  CommandResult res;
  res.text = "# theorem " + theorem + ": " + title + "\n";
  res.text += "# corpus: " + corpus_label + " (" + std::to_string(corpus.size()) + " groups)\n";
  res.text += std::string(kCorpusCaveat) + "\n";
  std::vector<std::vector<std::string>> cells;
  for (auto const& r : rows) {
    cells.push_back(table_cells(r));
    res.records.push_back(r.to_csv());
  }
  res.text += render_table(kRowHeader, cells);
  Tally const t = tally(rows);
  res.text += summary_line(t);
  res.exit_code = exit_for(t);
  return res;
}

CommandResult cmd_spot_checks(std::string const& which, RunOptions const& opts) {
  struct Item {
    char theorem;
    char const* name;
    SpectrumKind kind;
    std::uint64_t n;
    bool discrepancy_expected;
  };
  static const std::vector<Item> items{
      {'A', "A4", SpectrumKind::Element, 3, false},
      {'A', "A6", SpectrumKind::Element, 5, false},
      {'A', "S5", SpectrumKind::Element, 6, false},
      {'A', "S6", SpectrumKind::Element, 6, false},
      {'A', "A7", SpectrumKind::Element, 7, false},
      {'B', "C2", SpectrumKind::Subgroup, 1, false},
      {'B', "C3", SpectrumKind::Subgroup, 1, false},
      {'B', "C5", SpectrumKind::Subgroup, 1, false},
      {'B', "C7", SpectrumKind::Subgroup, 1, false},
      {'B', "C4", SpectrumKind::Subgroup, 2, false},
      {'B', "C2^2", SpectrumKind::Subgroup, 2, false},
      {'B', "S3", SpectrumKind::Subgroup, 3, false},
      {'B', "C6", SpectrumKind::Subgroup, 3, false},
      {'B', "A4", SpectrumKind::Subgroup, 4, false},
      {'C', "C3", SpectrumKind::AbelianSubgroup, 1, false},
      {'C', "C4", SpectrumKind::AbelianSubgroup, 2, false},
      {'C', "C2^2", SpectrumKind::AbelianSubgroup, 2, false},
      {'C', "S3", SpectrumKind::AbelianSubgroup, 3, false},
      {'C', "C6", SpectrumKind::AbelianSubgroup, 3, false},
      {'C', "A4", SpectrumKind::AbelianSubgroup, 4, false},
      {'C', "S4", SpectrumKind::AbelianSubgroup, 4, false},
      {'C', "A5", SpectrumKind::AbelianSubgroup, 4, true},
      {'C', "S5", SpectrumKind::AbelianSubgroup, 4, true},
  };
  if (which != "A" && which != "B" && which != "C" && which != "ABC") {
    throw PreconditionError("spot checks are A, B, C or ABC; got '" + which + "'");
  }
  std::vector<Item> selected;
  for (auto const& it : items)
    if (which.find(it.theorem) != std::string::npos) selected.push_back(it);

  auto reports = parallel_map<classify::SpotCheckReport>(
      selected.size(), opts.jobs, [&](std::size_t i) {
        return classify::theorem_ABC_spot_check(selected[i].name, selected[i].kind,
                                                selected[i].n, opts.subgroup_cap);
      });

  CommandResult res;
  res.text = "# consecutive spectra {1..n} for the r=1 classifications (" + which + ")\n";
  std::vector<ReportRow> rows;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    auto const& it = selected[i];
    auto const& r = reports[i];
    std::string structure = std::string("theorem ") + it.theorem + " n=" + std::to_string(it.n);
    std::string verdict = yes_no(r.pass);
    if (it.discrepancy_expected) {
      auto const actual = r.computed.empty() ? 0 : r.computed.max();
      bool const consecutive = r.computed == Spectrum::consecutive(actual);
      structure += r.pass ? " (matches listed n)"
                          : " (discrepancy: computed " +
                                (consecutive ? "{1.." + std::to_string(actual) + "}"
                                             : r.computed.render("|")) +
                                ")";
      verdict = r.pass ? "yes" : "discrepancy";
    } else if (!r.pass) {
      ++failed;
    }
    rows.push_back({r.name, "", std::string(spectra::short_name(r.kind)), r.computed.render("|"),
                    ratio_field(is_arithmetic_progression(r.computed)), structure, verdict});
  }
  std::vector<std::vector<std::string>> cells;
  for (auto& r : rows) {
    r.order = std::to_string(classify::reference_group(r.name).order());
    cells.push_back(table_cells(r));
    res.records.push_back(r.to_csv());
  }
  res.text += render_table(kRowHeader, cells);
  res.text += "summary: checked " + std::to_string(rows.size()) + ", failed " +
              std::to_string(failed) + "\n";
  res.exit_code = failed ? kExitInconsistent : kExitOk;
  return res;
}

CommandResult cmd_pairs(std::uint64_t limit) {
  CommandResult res;
  auto const pairs = numtheory::cunningham_pairs(limit);
  std::vector<std::vector<std::string>> cells;
  for (auto const& [q, p] : pairs) {
    cells.push_back({std::to_string(q), std::to_string(p)});
    res.records.push_back(std::to_string(q) + "," + std::to_string(p));
  }
  res.text = "# prime pairs (q, p) with p = 2q - 1, q <= " + std::to_string(limit) + "\n";
  res.text += render_table({"q", "p"}, cells);
  res.text += "count: " + std::to_string(pairs.size()) + "\n";
  return res;
}

CommandResult cmd_scan_open_problem(std::vector<CatalogEntry> const& corpus,
                                    std::string const& corpus_label, RunOptions const& opts) {
  auto per_entry = parallel_map<ReportRow>(corpus.size(), opts.jobs, [&](std::size_t i) {
    auto const& e = corpus[i];
    std::vector<ReportRow> skipped;
    auto g = try_build(e, opts, "ns", skipped);
    if (!g) return skipped.front();
    std::string const order = std::to_string(g->order());
    if (g->order() > opts.subgroup_cap) {
      return skipped_row(e.name, order, "ns",
                         "cap exceeded: order " + order + " above subgroup cap " +
                             std::to_string(opts.subgroup_cap));
    }
    Spectrum const ns = spectra::normal_subgroup_order_spectrum(*g, opts.subgroup_cap);
    APResult const ap = is_arithmetic_progression(ns);
    return ReportRow{e.name,        order, "ns", ns.render("|"), ratio_field(ap),
                     ap.is_ap ? "ap" : "not ap", "n/a"};
  });

  CommandResult res;
  res.text = "# proper normal subgroup orders forming an arithmetic progression\n";
  res.text += "# corpus: " + corpus_label + " (" + std::to_string(corpus.size()) + " groups)\n";
  res.text += std::string(kCorpusCaveat) + "\n";
  std::vector<std::vector<std::string>> cells;
  std::size_t ap_count = 0, scanned = 0, skipped = 0, cap_skipped = 0;
  for (auto const& r : per_entry) {
    res.records.push_back(r.to_csv());
    if (r.consistent == "skipped") {
      ++skipped;
      if (r.structure.rfind("cap exceeded", 0) == 0) ++cap_skipped;
      continue;
    }
    ++scanned;
    if (r.structure == "ap") {
      ++ap_count;
      cells.push_back({r.name, r.order, r.spectrum, r.ratio});
    }
  }
  res.text += render_table({"name", "order", "pi_ns", "ratio"}, cells);
  res.text += "summary: scanned " + std::to_string(scanned) + ", ap " + std::to_string(ap_count) +
              ", skipped " + std::to_string(skipped) + "\n";
  if (scanned == 0 && cap_skipped > 0) res.exit_code = kExitCapExceeded;
  return res;
}

}  // namespace progressio::harness
