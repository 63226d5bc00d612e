#include "yaxl/io.hpp"

#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "yaxl/error.hpp"

#ifndef YAXL_VERSION
#define YAXL_VERSION "0.0.0"
#endif

namespace yaxl {

  using json = nlohmann::json;

  char const* version() noexcept {
    return YAXL_VERSION;
  }

  std::optional<Format> parse_format(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    return std::nullopt;
  }

  Format detect_format(std::string_view text) {
    bool line_start = true;
    bool comment    = false;
    for (char c : text) {
      if (c == '\n') {
        line_start = true;
        comment    = false;
        continue;
      }
      if (comment || c == ' ' || c == '\t' || c == '\r') {
        continue;
      }
      if (line_start && c == '#') {
        comment = true;
        continue;
      }
      return c == '{' ? Format::json : Format::text;
    }
    return Format::text;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      column;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    // Non-empty, non-comment lines split into whitespace separated tokens.
    std::vector<Line> split_lines(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        std::string_view const raw = text.substr(pos, end - pos);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) {
          ++i;
        }
        if (i < raw.size() && raw[i] != '#') {
          while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) {
              ++i;
            }
            std::size_t const start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') {
              ++i;
            }
            if (i > start) {
              line.tokens.push_back({raw.substr(start, i - start), start + 1});
            }
          }
        }
        if (!line.tokens.empty()) {
          out.push_back(std::move(line));
        }
        pos = end + 1;
      }
      return out;
    }

    Point parse_entry(Token const& t, std::size_t line, std::size_t bound) {
      unsigned long v   = 0;
      auto const    res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (res.ec != std::errc{} || res.ptr != t.text.data() + t.text.size()) {
        throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'",
                         line, t.column);
      }
      if (v >= bound) {
        throw ParseError("entry " + std::to_string(v) + " outside [0, " + std::to_string(bound)
                             + ")",
                         line, t.column);
      }
      return static_cast<Point>(v);
    }

    class LineCursor {
     public:
      explicit LineCursor(std::string_view text) : lines_(split_lines(text)) {}

      bool done() const { return i_ == lines_.size(); }

      std::size_t read_size() {
        Line const& l = next("size line");
        if (l.tokens.size() != 1) {
          throw ParseError("expected a single size on the line", l.number, l.tokens[1].column);
        }
        Point const n = parse_entry(l.tokens[0], l.number, 1U << 16);
        if (n == 0) {
          throw ParseError("size must be positive", l.number, l.tokens[0].column);
        }
        return n;
      }

      void read_rows(std::size_t n, std::vector<Point>& out) {
        for (std::size_t r = 0; r < n; ++r) {
          Line const& l = next("row " + std::to_string(r));
          if (l.tokens.size() != n) {
            std::size_t const col = l.tokens.size() > n ? l.tokens[n].column : 1;
            throw ParseError("expected " + std::to_string(n) + " entries, got "
                                 + std::to_string(l.tokens.size()),
                             l.number, col);
          }
          for (auto const& t : l.tokens) {
            out.push_back(parse_entry(t, l.number, n));
          }
        }
      }

      void expect_end() const {
        if (!done()) {
          throw ParseError("unexpected trailing content", lines_[i_].number,
                           lines_[i_].tokens[0].column);
        }
      }

     private:
      Line const& next(std::string const& what) {
        if (done()) {
          std::size_t const last = lines_.empty() ? 1 : lines_.back().number + 1;
          throw ParseError("unexpected end of input, expected " + what, last, 1);
        }
        return lines_[i_++];
      }

      std::vector<Line> lines_;
      std::size_t       i_ = 0;
    };

    // Converts the byte offset of a JSON parse error to line / column.
    [[noreturn]] void rethrow_json(std::string_view text, json::parse_error const& e) {
      std::size_t const byte = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
      std::size_t       line = 1, col = 1;
      for (std::size_t i = 0; i < byte; ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw ParseError("invalid JSON", line, col);
    }

    json parse_json(std::string_view text) {
      try {
        return json::parse(text.begin(), text.end(), nullptr, true, true);
      } catch (json::parse_error const& e) {
        rethrow_json(text, e);
      }
    }

    json const& field(json const& j, char const* key, std::string const& where) {
      if (!j.is_object() || !j.contains(key)) {
        throw InputError(where + ": missing key \"" + key + "\"");
      }
      return j.at(key);
    }

    std::size_t get_size(json const& j, std::string const& where) {
      if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0
          || j.get<std::uint64_t>() > (1U << 16)) {
        throw InputError(where + ": expected a positive size");
      }
      return j.get<std::size_t>();
    }

    std::vector<Point> get_row(json const& j, std::size_t len, std::size_t bound,
                               std::string const& where) {
      if (!j.is_array() || j.size() != len) {
        throw InputError(where + ": expected an array of " + std::to_string(len) + " entries");
      }
      std::vector<Point> out;
      for (std::size_t i = 0; i < len; ++i) {
        if (!j[i].is_number_unsigned() || j[i].get<std::uint64_t>() >= bound) {
          throw InputError(where + "[" + std::to_string(i) + "]: expected an integer in [0, "
                           + std::to_string(bound) + ")");
        }
        out.push_back(j[i].get<Point>());
      }
      return out;
    }

    std::vector<Point> get_table(json const& j, std::size_t n, std::string const& where) {
      if (!j.is_array() || j.size() != n) {
        throw InputError(where + ": expected " + std::to_string(n) + " rows");
      }
      std::vector<Point> out;
      for (std::size_t r = 0; r < n; ++r) {
        auto row = get_row(j[r], n, n, where + "[" + std::to_string(r) + "]");
        out.insert(out.end(), row.begin(), row.end());
      }
      return out;
    }

    json table_json(std::span<Point const> data, std::size_t n) {
      json rows = json::array();
      for (std::size_t r = 0; r < n; ++r) {
        rows.push_back(std::vector<Point>(data.begin() + r * n, data.begin() + (r + 1) * n));
      }
      return rows;
    }

    json magma_json(Magma const& m) {
      return {{"n", m.size()}, {"table", table_json(m.data(), m.size())}};
    }

    Magma magma_from_json(json const& j, std::string const& where) {
      std::size_t const n = get_size(field(j, "n", where), where + ".n");
      return Magma(n, get_table(field(j, "table", where), n, where + ".table"));
    }

    // A bare Cayley table [[...]] or a Magma object.
    Magma fiber_from_json(json const& j, std::string const& where) {
      if (j.is_object()) {
        return magma_from_json(j, where);
      }
      if (!j.is_array() || j.empty()) {
        throw InputError(where + ": expected a table");
      }
      return Magma(j.size(), get_table(j, j.size(), where));
    }

    void write_rows(std::ostringstream& os, std::span<Point const> data, std::size_t n) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          os << (c ? " " : "") << data[r * n + c];
        }
        os << '\n';
      }
    }
  }  // namespace

  FnMap parse_fnmap(std::string_view line) {
    auto lines = split_lines(line);
    if (lines.size() != 1) {
      throw ParseError("expected one line of images", lines.empty() ? 1 : lines[1].number, 1);
    }
    std::size_t const  n = lines[0].tokens.size();
    std::vector<Point> v;
    for (auto const& t : lines[0].tokens) {
      v.push_back(parse_entry(t, lines[0].number, n));
    }
    return FnMap(std::move(v));
  }

  std::string write_fnmap(FnMap const& f) {
    return to_string(f);
  }

  Magma parse_magma(std::string_view text, Format format) {
    if (format == Format::json) {
      return magma_from_json(parse_json(text), "magma");
    }
    LineCursor         cur(text);
    std::size_t const  n = cur.read_size();
    std::vector<Point> t;
    cur.read_rows(n, t);
    cur.expect_end();
    return Magma(n, std::move(t));
  }

  std::string write_magma(Magma const& m, Format format) {
    if (format == Format::json) {
      return magma_json(m).dump() + "\n";
    }
    std::ostringstream os;
    os << m.size() << '\n';
    write_rows(os, m.data(), m.size());
    return os.str();
  }

  std::vector<Magma> parse_magma_stream(std::string_view text) {
    LineCursor         cur(text);
    std::vector<Magma> out;
    while (!cur.done()) {
      std::size_t const  n = cur.read_size();
      std::vector<Point> t;
      cur.read_rows(n, t);
      out.emplace_back(n, std::move(t));
    }
    return out;
  }

  std::string write_magma_stream(std::vector<Magma> const& ms) {
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (i) {
        out += '\n';
      }
      out += write_magma(ms[i], Format::text);
    }
    return out;
  }

  SolutionTable parse_solution(std::string_view text, Format format) {
    if (format == Format::json) {
      json const        j = parse_json(text);
      std::size_t const n = get_size(field(j, "n", "solution"), "solution.n");
      return SolutionTable(n, get_table(field(j, "lambda", "solution"), n, "solution.lambda"),
                           get_table(field(j, "rho", "solution"), n, "solution.rho"));
    }
    LineCursor         cur(text);
    std::size_t const  n = cur.read_size();
    std::vector<Point> lam, rho;
    cur.read_rows(n, lam);
    cur.read_rows(n, rho);
    cur.expect_end();
    return SolutionTable(n, std::move(lam), std::move(rho));
  }

  std::string write_solution(SolutionTable const& s, Format format) {
    std::size_t const n = s.size();
    if (format == Format::json) {
      json j = {{"n", n},
                {"lambda", table_json(s.lambda_data(), n)},
                {"rho", table_json(s.rho_data(), n)}};
      return j.dump() + "\n";
    }
    std::ostringstream os;
    os << n << '\n';
    write_rows(os, s.lambda_data(), n);
    os << '\n';
    write_rows(os, s.rho_data(), n);
    return os.str();
  }

  TwistFamily parse_twist(std::string_view text) {
    json const        j    = parse_json(text);
    Magma             base = magma_from_json(field(j, "shelf", "twist"), "twist.shelf");
    std::size_t const n    = base.size();
    json const&       phi  = field(j, "phi", "twist");
    if (!phi.is_array() || phi.size() != n) {
      throw InputError("twist.phi: expected " + std::to_string(n) + " maps");
    }
    std::vector<FnMap> maps;
    for (std::size_t a = 0; a < n; ++a) {
      maps.emplace_back(get_row(phi[a], n, n, "twist.phi[" + std::to_string(a) + "]"));
    }
    return TwistFamily(std::move(base), std::move(maps));
  }

  std::string write_twist(TwistFamily const& t) {
    json phi = json::array();
    for (auto const& f : t.phis()) {
      phi.push_back(std::vector<Point>(f.images().begin(), f.images().end()));
    }
    return json{{"shelf", magma_json(t.base())}, {"phi", phi}}.dump() + "\n";
  }

  SemilatticeSystem parse_system(std::string_view text, std::string const& fiber_key) {
    json const        j  = parse_json(text);
    json const&       sl = field(j, "semilattice", "system");
    std::size_t const m  = get_size(field(sl, "m", "system.semilattice"), "system.semilattice.m");
    SemilatticeSystem sys;
    sys.semilattice = Magma(m, get_table(field(sl, "meet", "system.semilattice"), m,
                                         "system.semilattice.meet"));
    json const& fibers = field(j, fiber_key.c_str(), "system");
    if (!fibers.is_array()) {
      throw InputError("system." + fiber_key + ": expected an array");
    }
    for (std::size_t a = 0; a < fibers.size(); ++a) {
      sys.fibers.push_back(
          fiber_from_json(fibers[a], "system." + fiber_key + "[" + std::to_string(a) + "]"));
    }
    if (sys.fibers.size() != m) {
      throw InputError("system." + fiber_key + ": expected " + std::to_string(m) + " entries");
    }
    json const homs = j.contains("homs") ? j.at("homs") : json::array();
    if (!homs.is_array()) {
      throw InputError("system.homs: expected an array");
    }
    for (std::size_t k = 0; k < homs.size(); ++k) {
      std::string const where = "system.homs[" + std::to_string(k) + "]";
      json const&       h     = homs[k];
      auto const        from  = get_row(json::array({field(h, "from", where)}), 1, m, where + ".from")[0];
      auto const        to    = get_row(json::array({field(h, "to", where)}), 1, m, where + ".to")[0];
      std::size_t const src   = sys.fibers[from].size();
      std::size_t const dst   = sys.fibers[to].size();
      FnMap f(get_row(field(h, "map", where), src, dst, where + ".map"), dst);
      if (!sys.homs.emplace(std::pair{from, to}, std::move(f)).second) {
        throw InputError(where + ": duplicate homomorphism");
      }
    }
    return sys;
  }

  std::string write_system(SemilatticeSystem const& s, std::string const& fiber_key) {
    json fibers = json::array();
    for (auto const& f : s.fibers) {
      fibers.push_back(table_json(f.data(), f.size()));
    }
    json homs = json::array();
    for (auto const& [key, f] : s.homs) {
      homs.push_back({{"from", key.first},
                      {"to", key.second},
                      {"map", std::vector<Point>(f.images().begin(), f.images().end())}});
    }
    json j = {{"semilattice",
               {{"m", s.semilattice.size()},
                {"meet", table_json(s.semilattice.data(), s.semilattice.size())}}},
              {fiber_key, fibers},
              {"homs", homs}};
    return j.dump() + "\n";
  }

  WeakBraceTable parse_weak_brace(std::string_view text) {
    json const        j = parse_json(text);
    std::size_t const n = get_size(field(j, "n", "weak brace"), "weak brace.n");
    return {Magma(n, get_table(field(j, "add", "weak brace"), n, "weak brace.add")),
            Magma(n, get_table(field(j, "mul", "weak brace"), n, "weak brace.mul"))};
  }

  std::string write_weak_brace(WeakBraceTable const& b) {
    json j = {{"n", b.size()},
              {"add", table_json(b.add.data(), b.size())},
              {"mul", table_json(b.mul.data(), b.size())}};
    return j.dump() + "\n";
  }

}  // namespace yaxl
