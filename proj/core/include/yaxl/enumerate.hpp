#pragma once

// Isomorphism-free enumeration of small shelves and quasi racks, the
// cross tabulation of their properties, and the counterexample searches
// for the two open questions about quasi non-degenerate solutions.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "yaxl/magma.hpp"
#include "yaxl/solution_table.hpp"

namespace yaxl {

  enum class StructureClass { shelf, rack, quandle, quasi_rack, quasi_quandle };

  namespace filter {
    inline constexpr unsigned star                = 1U << 0;
    inline constexpr unsigned starstar            = 1U << 1;
    inline constexpr unsigned starstarstar        = 1U << 2;
    inline constexpr unsigned derived_is_solution = 1U << 3;
  }  // namespace filter

  // Default size guard; allow_large lifts it up to kMaxCanonicalSize.
  inline constexpr std::size_t kDefaultMaxEnumerationSize = 5;

  struct EnumerationSpec {
    std::size_t    n       = 1;
    StructureClass cls     = StructureClass::quasi_rack;
    unsigned       filters = 0;  // conjunction of filter:: bits
    bool           stream  = false;
    unsigned       workers = 1;
    bool           allow_large = false;
  };

  struct EnumerationResult {
    std::uint64_t      count = 0;
    std::vector<Magma> items;  // canonical forms, sorted; filled when streaming
  };

  // Throws InputError for n = 0, filters on a non quasi class, or a size
  // beyond the guard.
  EnumerationResult enumerate(EnumerationSpec const& spec);

  std::string        to_string(StructureClass c);
  std::optional<StructureClass> parse_structure_class(std::string const& s);
  std::optional<unsigned>       parse_filter(std::string const& s);

  struct Table1Row {
    std::size_t   n = 0;
    std::uint64_t racks = 0, quasi_racks = 0, derived_solutions = 0;
    std::uint64_t star = 0, starstar = 0, starstarstar = 0;
    std::uint64_t star_and_starstarstar     = 0;
    std::uint64_t starstarstar_not_starstar = 0;
    std::uint64_t ds_without_star_or_starstar = 0;
  };

  // One pass over the quasi racks of order n (n <= 4 without allow_large).
  Table1Row cross_tabulate(std::size_t n, unsigned workers = 1, bool allow_large = false);

  // Reference values of the six tabulated columns, n = 2, 3, 4.
  std::optional<Table1Row> table1_expected(std::size_t n);
  bool matches_table1(Table1Row const& got, Table1Row const& expected);

  struct SearchOptions {
    std::size_t                  n = 1;
    // Exhaustive for n <= 3; n >= 4 needs a seed and is sampled.
    std::optional<std::uint64_t> seed;
    std::uint64_t                samples = 2000;     // lambda families sampled
    std::uint64_t                node_budget = 20000;  // rho nodes per sample
    unsigned                     workers = 1;
    bool                         allow_large = false;
  };

  struct SearchReport {
    int           question   = 0;
    std::size_t   n          = 0;
    bool          exhaustive = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t lambda_families = 0;  // families with every lambda_x regular and central
    std::uint64_t solutions       = 0;  // solutions over those families
    std::uint64_t qualifying      = 0;  // solutions meeting the question's hypotheses
    std::vector<SolutionTable> candidates;
    std::string   summary;
  };

  // Quasi non-degenerate solutions that are not quasi bijective.
  SearchReport search_question1(SearchOptions const& opt);
  // Quasi left non-degenerate, quasi bijective solutions with (A), (B), (C)
  // whose structure shelf is not a quasi rack.
  SearchReport search_question2(SearchOptions const& opt);

  // Runs fn(i) for i in [0, count) on up to `workers` threads.
  void parallel_for(std::size_t count, unsigned workers,
                    std::function<void(std::size_t)> const& fn);

}  // namespace yaxl
