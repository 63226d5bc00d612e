#pragma once

// Text and JSON formats.
//
// Magma text:    a line "n", then n lines of n entries; row x lists L_x.
// Solution text: a line "n", n lines for lambda (row x lists lambda_x), a
//                blank line, n lines for rho (row y lists rho_y).
// Lines starting with '#' are comments everywhere.  All entries are 0-based.
//
// JSON shapes:
//   Magma     {"n": n, "table": [[...], ...]}
//   Solution  {"n": n, "lambda": [[...]], "rho": [[...]]}, rho[y][x] = rho_y(x)
//   Twist     {"shelf": <Magma>, "phi": [[...], ...]}
//   System    {"semilattice": {"m": m, "meet": [[...]]},
//              "groups" | "fibers": [<table or Magma>, ...],
//              "homs": [{"from": a, "to": b, "map": [...]}, ...]}
//   WeakBrace {"n": n, "add": [[...]], "mul": [[...]]}
// Unknown keys are ignored, so writers may add a "provenance" object.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "yaxl/constructions.hpp"
#include "yaxl/magma.hpp"
#include "yaxl/semilattice.hpp"
#include "yaxl/solution_table.hpp"
#include "yaxl/twists.hpp"

namespace yaxl {

  char const* version() noexcept;

  enum class Format { text, json };

  std::optional<Format> parse_format(std::string_view s);
  // JSON if the first non-blank, non-comment character is '{'.
  Format detect_format(std::string_view text);

  // Throws InputError if the file cannot be read.
  std::string read_file(std::string const& path);

  std::uint64_t fnv1a64(std::string_view data);

  // Space separated images on one line.
  FnMap       parse_fnmap(std::string_view line);
  std::string write_fnmap(FnMap const& f);

  // Parse errors are ParseError with a 1-based line and column.
  Magma       parse_magma(std::string_view text, Format format);
  std::string write_magma(Magma const& m, Format format);

  // Text records "n" + n rows, separated by blank lines.
  std::vector<Magma> parse_magma_stream(std::string_view text);
  std::string        write_magma_stream(std::vector<Magma> const& ms);

  SolutionTable parse_solution(std::string_view text, Format format);
  std::string   write_solution(SolutionTable const& s, Format format);

  TwistFamily parse_twist(std::string_view json);
  std::string write_twist(TwistFamily const& t);

  // fiber_key is "groups" or "fibers".  Only the shape is checked here.
  SemilatticeSystem parse_system(std::string_view json, std::string const& fiber_key);
  std::string       write_system(SemilatticeSystem const& s, std::string const& fiber_key);

  WeakBraceTable parse_weak_brace(std::string_view json);
  std::string    write_weak_brace(WeakBraceTable const& b);

}  // namespace yaxl
