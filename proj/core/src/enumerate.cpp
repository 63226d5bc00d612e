#include "yaxl/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "yaxl/error.hpp"
#include "yaxl/shelves.hpp"
#include "yaxl/solutions.hpp"

namespace yaxl {

  void parallel_for(std::size_t count, unsigned workers,
                    std::function<void(std::size_t)> const& fn) {
    unsigned const threads = std::max(1U, std::min<unsigned>(workers, count));
    if (threads <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        fn(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
            next = count;
          }
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

  std::string to_string(StructureClass c) {
    switch (c) {
      case StructureClass::shelf: return "shelf";
      case StructureClass::rack: return "rack";
      case StructureClass::quandle: return "quandle";
      case StructureClass::quasi_rack: return "quasi_rack";
      case StructureClass::quasi_quandle: return "quasi_quandle";
    }
    return "?";
  }

  std::optional<StructureClass> parse_structure_class(std::string const& s) {
    for (auto c : {StructureClass::shelf, StructureClass::rack, StructureClass::quandle,
                   StructureClass::quasi_rack, StructureClass::quasi_quandle}) {
      if (s == to_string(c)) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::optional<unsigned> parse_filter(std::string const& s) {
    if (s == "star") return filter::star;
    if (s == "starstar") return filter::starstar;
    if (s == "starstarstar") return filter::starstarstar;
    if (s == "derived_is_solution") return filter::derived_is_solution;
    return std::nullopt;
  }

  namespace {
    constexpr std::size_t kMaxN = kMaxCanonicalSize;
    using Row                   = std::array<std::uint8_t, kMaxN>;

    struct Candidate {
      Row img{}, zero{};
    };

    std::vector<Candidate> row_candidates(std::size_t n, StructureClass cls) {
      std::vector<FnMap> maps;
      switch (cls) {
        case StructureClass::shelf: maps = all_maps(n); break;
        case StructureClass::rack:
        case StructureClass::quandle: maps = permutations(n); break;
        default: maps = completely_regular_maps(n); break;
      }
      std::vector<Candidate> out;
      for (auto const& f : maps) {
        Candidate c;
        auto      t = relative_inverse(f);
        for (Point i = 0; i < n; ++i) {
          c.img[i]  = static_cast<std::uint8_t>(f(i));
          c.zero[i] = t ? static_cast<std::uint8_t>(t->idempotent(i)) : 0;
        }
        out.push_back(c);
      }
      return out;
    }

    bool is_quasi(StructureClass c) {
      return c == StructureClass::quasi_rack || c == StructureClass::quasi_quandle;
    }

    bool needs_fixed_diagonal(StructureClass c) {
      return c == StructureClass::quandle || c == StructureClass::quasi_quandle;
    }

    // Backtracking over rows L_0, ..., L_{n-1}.
    class RowSearch {
     public:
      RowSearch(std::size_t n, StructureClass cls)
          : n_(n), cls_(cls), cands_(row_candidates(n, cls)) {
        std::size_t const c = cands_.size();
        central_.assign(c * c, true);
        if (is_quasi(cls)) {
          for (std::size_t a = 0; a < c; ++a) {
            for (std::size_t b = 0; b < c; ++b) {
              bool ok = true;
              for (Point i = 0; i < n && ok; ++i) {
                ok = cands_[a].zero[cands_[b].img[i]] == cands_[b].img[cands_[a].zero[i]];
              }
              central_[a * c + b] = ok;
            }
          }
        }
      }

      std::size_t first_row_choices() const { return cands_.size(); }

      // Canonical complete tables whose first row is candidate `first`.
      std::vector<Magma> run(std::size_t first) {
        out_.clear();
        if (admissible(0, first)) {
          place(0, first);
        }
        return std::move(out_);
      }

     private:
      bool admissible(std::size_t k, std::size_t c) const {
        if (needs_fixed_diagonal(cls_) && cands_[c].img[k] != k) {
          return false;
        }
        if (is_quasi(cls_)) {
          std::size_t const m = cands_.size();
          if (!central_[c * m + c]) {
            return false;
          }
          for (std::size_t j = 0; j < k; ++j) {
            if (!central_[c * m + pick_[j]] || !central_[pick_[j] * m + c]) {
              return false;
            }
          }
        }
        return true;
      }

      // Self-distributivity instances x |> (y |> z) = (x |> y) |> (x |> z)
      // that became decidable when row k was placed.
      bool consistent(std::size_t k) const {
        for (std::size_t x = 0; x <= k; ++x) {
          for (std::size_t y = 0; y <= k; ++y) {
            std::size_t const t = cands_[pick_[x]].img[y];
            if (t > k || std::max({x, y, t}) != k) {
              continue;
            }
            Row const& lx = cands_[pick_[x]].img;
            Row const& ly = cands_[pick_[y]].img;
            Row const& lt = cands_[pick_[t]].img;
            for (std::size_t z = 0; z < n_; ++z) {
              if (lx[ly[z]] != lt[lx[z]]) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void place(std::size_t k, std::size_t c) {
        pick_[k] = c;
        if (!consistent(k)) {
          return;
        }
        if (k + 1 == n_) {
          emit();
          return;
        }
        for (std::size_t d = 0; d < cands_.size(); ++d) {
          if (admissible(k + 1, d)) {
            place(k + 1, d);
          }
        }
      }

      void emit() {
        std::vector<Point> t(n_ * n_);
        for (std::size_t x = 0; x < n_; ++x) {
          for (std::size_t y = 0; y < n_; ++y) {
            t[x * n_ + y] = cands_[pick_[x]].img[y];
          }
        }
        Magma m(n_, std::move(t));
        if (is_canonical(m)) {
          out_.push_back(std::move(m));
        }
      }

      std::size_t                  n_;
      StructureClass               cls_;
      std::vector<Candidate>       cands_;
      std::vector<bool>            central_;
      std::array<std::size_t, kMaxN> pick_{};
      std::vector<Magma>           out_;
    };

    std::vector<Magma> canonical_members(std::size_t n, StructureClass cls,
                                         unsigned workers) {
      RowSearch const                 proto(n, cls);
      std::size_t const               tasks = proto.first_row_choices();
      std::vector<std::vector<Magma>> parts(tasks);
      parallel_for(tasks, workers, [&](std::size_t i) {
        RowSearch local = proto;
        parts[i]        = local.run(i);
      });
      std::vector<Magma> all;
      for (auto& p : parts) {
        all.insert(all.end(), std::make_move_iterator(p.begin()),
                   std::make_move_iterator(p.end()));
      }
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      return all;
    }

    void check_guard(std::size_t n, std::size_t limit, bool allow_large) {
      if (n == 0) {
        throw InputError("enumerate: n must be positive");
      }
      if (n > kMaxN) {
        throw InputError("enumerate: n = " + std::to_string(n) + " exceeds the hard limit "
                         + std::to_string(kMaxN));
      }
      if (n > limit && !allow_large) {
        throw InputError("enumerate: n = " + std::to_string(n) + " exceeds the guard "
                         + std::to_string(limit) + " (override required)");
      }
    }

    unsigned quasi_flags(QuasiRackData const& q) {
      unsigned f = 0;
      if (check_star(q)) f |= filter::star;
      if (check_starstar(q)) f |= filter::starstar;
      if (check_starstarstar(q)) f |= filter::starstarstar;
      if (is_solution(derived_map(q))) f |= filter::derived_is_solution;
      return f;
    }
  }  // namespace

  EnumerationResult enumerate(EnumerationSpec const& spec) {
    check_guard(spec.n, kDefaultMaxEnumerationSize, spec.allow_large);
    if (spec.filters != 0 && !is_quasi(spec.cls)) {
      throw InputError("enumerate: filters apply only to quasi_rack and quasi_quandle");
    }
    EnumerationResult res;
    for (auto& m : canonical_members(spec.n, spec.cls, spec.workers)) {
      if (spec.filters != 0) {
        auto q = quasi_rack_structure(m);
        if (!q || (quasi_flags(*q) & spec.filters) != spec.filters) {
          continue;
        }
      }
      ++res.count;
      if (spec.stream) {
        res.items.push_back(std::move(m));
      }
    }
    return res;
  }

  Table1Row cross_tabulate(std::size_t n, unsigned workers, bool allow_large) {
    check_guard(n, 4, allow_large);
    Table1Row row;
    row.n = n;
    for (auto const& m : canonical_members(n, StructureClass::quasi_rack, workers)) {
      auto q = quasi_rack_structure(m);
      if (!q) {
        throw InternalError("cross_tabulate: enumerated table is not a quasi rack");
      }
      unsigned const f = quasi_flags(*q);
      bool const     s1 = f & filter::star, s2 = f & filter::starstar,
                 s3 = f & filter::starstarstar, ds = f & filter::derived_is_solution;
      ++row.quasi_racks;
      row.racks += is_rack(m);
      row.derived_solutions += ds;
      row.star += s1;
      row.starstar += s2;
      row.starstarstar += s3;
      row.star_and_starstarstar += s1 && s3;
      row.starstarstar_not_starstar += s3 && !s2;
      row.ds_without_star_or_starstar += ds && !s1 && !s2;
    }
    return row;
  }

  std::optional<Table1Row> table1_expected(std::size_t n) {
    Table1Row r;
    r.n = n;
    switch (n) {
      case 2:
        r.racks = 2, r.quasi_racks = 5, r.derived_solutions = 4;
        r.star = 4, r.starstar = 4, r.starstarstar = 3;
        return r;
      case 3:
        r.racks = 6, r.quasi_racks = 31, r.derived_solutions = 20;
        r.star = 17, r.starstar = 19, r.starstarstar = 13;
        return r;
      case 4:
        r.racks = 19, r.quasi_racks = 325, r.derived_solutions = 169;
        r.star = 90, r.starstar = 151, r.starstarstar = 91;
        return r;
      default: return std::nullopt;
    }
  }

  bool matches_table1(Table1Row const& got, Table1Row const& e) {
    return got.racks == e.racks && got.quasi_racks == e.quasi_racks
           && got.derived_solutions == e.derived_solutions && got.star == e.star
           && got.starstar == e.starstar && got.starstarstar == e.starstarstar;
  }

  // Question searches ---------------------------------------------------------

  namespace {
    constexpr std::uint8_t kUnset = 0xFF;

    struct LambdaFamily {
      std::vector<FnMap> lam;
    };

    // Families x -> lambda_x of completely regular maps whose idempotents
    // commute with every member.
    class LambdaSpace {
     public:
      explicit LambdaSpace(std::size_t n) : n_(n) {
        for (auto const& f : completely_regular_maps(n)) {
          maps_.push_back(f);
          zeros_.push_back(relative_inverse(f)->idempotent);
        }
        std::size_t const c = maps_.size();
        central_.assign(c * c, false);
        for (std::size_t a = 0; a < c; ++a) {
          for (std::size_t b = 0; b < c; ++b) {
            central_[a * c + b] = commutes(zeros_[a], maps_[b]);
          }
        }
      }

      std::size_t size() const { return maps_.size(); }

      bool compatible(std::vector<std::size_t> const& chosen, std::size_t c) const {
        std::size_t const m = maps_.size();
        if (!central_[c * m + c]) {
          return false;
        }
        for (std::size_t d : chosen) {
          if (!central_[c * m + d] || !central_[d * m + c]) {
            return false;
          }
        }
        return true;
      }

      // Every admissible family whose lambda_0 is map `first`.
      std::vector<LambdaFamily> families_from(std::size_t first) const {
        std::vector<LambdaFamily> out;
        std::vector<std::size_t>  chosen{first};
        if (!compatible({}, first)) {
          return out;
        }
        auto rec = [&](auto&& self) -> void {
          if (chosen.size() == n_) {
            LambdaFamily f;
            for (auto i : chosen) {
              f.lam.push_back(maps_[i]);
            }
            out.push_back(std::move(f));
            return;
          }
          for (std::size_t c = 0; c < maps_.size(); ++c) {
            if (compatible(chosen, c)) {
              chosen.push_back(c);
              self(self);
              chosen.pop_back();
            }
          }
        };
        rec(rec);
        return out;
      }

      LambdaFamily random_family(std::mt19937_64& rng) const {
        std::vector<std::size_t> chosen;
        while (chosen.size() < n_) {
          std::vector<std::size_t> ok;
          for (std::size_t c = 0; c < maps_.size(); ++c) {
            if (compatible(chosen, c)) {
              ok.push_back(c);
            }
          }
          // The identity is always compatible, so ok is never empty.
          chosen.push_back(ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)]);
        }
        LambdaFamily f;
        for (auto i : chosen) {
          f.lam.push_back(maps_[i]);
        }
        return f;
      }

     private:
      std::size_t        n_;
      std::vector<FnMap> maps_, zeros_;
      std::vector<bool>  central_;
    };

    // Backtracking over rho for a fixed lambda family.  Domains come from
    // (Y1); (Y2) and (Y3) instances are checked as soon as they are decided.
    class RhoSearch {
     public:
      RhoSearch(LambdaFamily const& f, bool right_regular)
          : n_(f.lam.size()), lam_(f.lam), right_regular_(right_regular),
            rho_(n_ * n_, kUnset), domain_(n_ * n_) {
        for (Point x = 0; x < n_; ++x) {
          for (Point y = 0; y < n_; ++y) {
            FnMap const target = compose(lam_[x], lam_[y]);
            FnMap const& outer = lam_[lam_[x](y)];
            for (Point w = 0; w < n_; ++w) {
              if (compose(outer, lam_[w]) == target) {
                domain_[y * n_ + x].push_back(static_cast<std::uint8_t>(w));
              }
            }
          }
        }
      }

      void run(std::function<void(SolutionTable const&)> const& visit,
               std::mt19937_64* rng, std::uint64_t budget) {
        visit_  = &visit;
        rng_    = rng;
        budget_ = budget;
        nodes_  = 0;
        rec(0);
      }

     private:
      Point lam(Point x, Point y) const { return lam_[x](y); }
      std::uint8_t rho(Point y, Point x) const { return rho_[y * n_ + x]; }

      bool decided_ok() const {
        for (Point x = 0; x < n_; ++x) {
          for (Point y = 0; y < n_; ++y) {
            std::uint8_t const ryx = rho(y, x);
            for (Point z = 0; z < n_; ++z) {
              Point const        lyz = lam(y, z);
              std::uint8_t const a   = rho(lyz, x);
              std::uint8_t const b   = rho(z, y);
              if (a != kUnset && b != kUnset && ryx != kUnset) {
                std::uint8_t const c = rho(lam(ryx, z), lam(x, y));
                if (c != kUnset && lam(a, b) != c) {
                  return false;
                }
              }
              if (ryx != kUnset && b != kUnset && a != kUnset) {
                std::uint8_t const l = rho(z, ryx);
                std::uint8_t const r = rho(b, a);
                if (l != kUnset && r != kUnset && l != r) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      bool row_regular(Point y) const {
        std::vector<Point> v(n_);
        for (Point x = 0; x < n_; ++x) {
          v[x] = rho(y, x);
        }
        return is_completely_regular(FnMap(std::move(v)));
      }

      void rec(std::size_t k) {
        if (rng_ && nodes_ >= budget_) {
          return;
        }
        ++nodes_;
        if (k == n_ * n_) {
          std::vector<Point> l(n_ * n_), r(rho_.begin(), rho_.end());
          for (Point x = 0; x < n_; ++x) {
            for (Point y = 0; y < n_; ++y) {
              l[x * n_ + y] = lam(x, y);
            }
          }
          SolutionTable s(n_, std::move(l), std::move(r));
          if (!is_solution(s)) {
            throw InternalError("question search: accepted table is not a solution");
          }
          (*visit_)(s);
          return;
        }
        std::vector<std::uint8_t> dom = domain_[k];
        if (rng_) {
          std::shuffle(dom.begin(), dom.end(), *rng_);
        }
        for (std::uint8_t w : dom) {
          rho_[k] = w;
          bool ok = decided_ok();
          if (ok && right_regular_ && (k + 1) % n_ == 0) {
            ok = row_regular(static_cast<Point>(k / n_));
          }
          if (ok) {
            rec(k + 1);
          }
        }
        rho_[k] = kUnset;
      }

      std::size_t                            n_;
      std::vector<FnMap>                     lam_;
      bool                                   right_regular_;
      std::vector<std::uint8_t>              rho_;
      std::vector<std::vector<std::uint8_t>> domain_;
      std::function<void(SolutionTable const&)> const* visit_ = nullptr;
      std::mt19937_64*                       rng_    = nullptr;
      std::uint64_t                          budget_ = 0;
      std::uint64_t                          nodes_  = 0;
    };

    struct Tally {
      std::uint64_t              families = 0, solutions = 0, qualifying = 0;
      std::vector<SolutionTable> candidates;
    };

    // Classifies one solution; returns {qualifies, is candidate}.
    using Judge = std::function<std::pair<bool, bool>(SolutionTable const&)>;

    SearchReport run_search(int question, SearchOptions const& opt, bool right_regular,
                            Judge const& judge) {
      check_guard(opt.n, 4, opt.allow_large);
      SearchReport rep;
      rep.question   = question;
      rep.n          = opt.n;
      rep.exhaustive = opt.n <= 3;
      rep.seed       = opt.seed;
      LambdaSpace const space(opt.n);

      auto absorb = [&](Tally& t, LambdaFamily const& f, std::mt19937_64* rng) {
        ++t.families;
        RhoSearch search(f, right_regular);
        search.run(
            [&](SolutionTable const& s) {
              ++t.solutions;
              auto const [q, c] = judge(s);
              t.qualifying += q;
              if (c) {
                t.candidates.push_back(s);
              }
            },
            rng, opt.node_budget);
      };

      std::vector<Tally> parts;
      if (rep.exhaustive) {
        parts.resize(space.size());
        parallel_for(space.size(), opt.workers, [&](std::size_t i) {
          for (auto const& f : space.families_from(i)) {
            absorb(parts[i], f, nullptr);
          }
        });
      } else {
        if (!opt.seed) {
          throw InputError("question search: sampled sizes require an explicit seed");
        }
        parts.resize(1);
        std::mt19937_64 rng(*opt.seed);
        for (std::uint64_t i = 0; i < opt.samples; ++i) {
          absorb(parts[0], space.random_family(rng), &rng);
        }
      }
      for (auto& t : parts) {
        rep.lambda_families += t.families;
        rep.solutions += t.solutions;
        rep.qualifying += t.qualifying;
        rep.candidates.insert(rep.candidates.end(), t.candidates.begin(), t.candidates.end());
      }
      std::sort(rep.candidates.begin(), rep.candidates.end());
      rep.candidates.erase(std::unique(rep.candidates.begin(), rep.candidates.end()),
                           rep.candidates.end());
      return rep;
    }

    std::string describe(SearchReport const& r, std::string const& question,
                         std::string const& hypotheses) {
      std::ostringstream os;
      os << "Open question: " << question << "\n";
      os << "Scope: n = " << r.n << ", "
         << (r.exhaustive ? "exhaustive over every lambda family"
                          : "sampled lambda families with a node budget per family")
         << "; " << r.lambda_families << " lambda families, " << r.solutions
         << " solutions, " << r.qualifying << " " << hypotheses << ".\n";
      if (r.candidates.empty()) {
        os << (r.exhaustive ? "No counterexample exists at this size."
                            : "No counterexample found in the sample; this is not "
                              "evidence that none exists.");
      } else {
        os << r.candidates.size()
           << " candidate(s) found at this size under the definitions as implemented "
              "(relative inverses taken in the full transformation monoid).";
      }
      os << " The question is stated as open; this finite search reports data for "
            "inspection and does not claim an answer.";
      return os.str();
    }
  }  // namespace

  SearchReport search_question1(SearchOptions const& opt) {
    SearchReport r = run_search(1, opt, true, [](SolutionTable const& s) {
      bool const qnd = quasi_nondeg(s).has_value();
      return std::pair{qnd, qnd && !quasi_bijective(s).has_value()};
    });
    r.summary = describe(r, "is every quasi non-degenerate solution quasi bijective?",
                         "quasi non-degenerate");
    return r;
  }

  SearchReport search_question2(SearchOptions const& opt) {
    SearchReport r = run_search(2, opt, false, [](SolutionTable const& s) {
      auto const d = quasi_left_nondeg(s);
      if (!d || !quasi_bijective(s) || !check_A(s, *d) || !check_B(s, *d)
          || !check_C(s, *d)) {
        return std::pair{false, false};
      }
      Magma const shelf = structure_magma(s, *d);
      if (!is_left_shelf(shelf)) {
        throw InternalError("question 2 search: structure magma is not a shelf");
      }
      return std::pair{true, !quasi_rack_structure(shelf).has_value()};
    });
    r.summary = describe(
        r,
        "for a quasi left non-degenerate, quasi bijective solution with (A), (B), "
        "(C), is the structure shelf always a quasi rack?",
        "quasi left non-degenerate, quasi bijective with (A), (B), (C)");
    return r;
  }

}  // namespace yaxl
