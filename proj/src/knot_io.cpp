#include "twistalex/knot_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace twistalex {

using ojson = nlohmann::ordered_json;

ParseError::ParseError(const std::string& what, int line, int column)
    : InputError(line > 0 ? "line " + std::to_string(line) + (column > 0 ? ", column " + std::to_string(column) : "") +
                                ": " + what
                          : what),
      line_(line),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Token {
  std::string_view text;
  int column = 0;  // 1-based, relative to the line
};

std::vector<Token> tokens_of(std::string_view s, int base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back({s.substr(i, j - i), base_column + static_cast<int>(i)});
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

struct Line {
  int number = 0;
  std::string_view text;  // without comment, untrimmed
};

// Splits into lines, dropping comments and blanks, and validates the optional
// header `twistalex <kind> <version>`.
std::vector<Line> content_lines(std::string_view text, std::string_view kind) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (out.empty() && trim(line).starts_with("twistalex ")) {
      auto toks = tokens_of(line, 1);
      std::int64_t version = 0;
      if (toks.size() != 3 || toks[1].text != kind || !parse_int(toks[2].text, version))
        throw ParseError("malformed header; expected `twistalex " + std::string(kind) + " " +
                             std::to_string(kFormatVersion) + "`",
                         number, 1);
      if (version != kFormatVersion)
        throw ParseError("unsupported format version " + std::to_string(version), number, toks[2].column);
      out.push_back({number, {}});  // header marker
      continue;
    }
    out.push_back({number, line});
    if (end == text.size()) break;
  }
  if (!out.empty() && out.front().text.empty()) out.erase(out.begin());
  return out;
}

// `key: value` split; column of value is 1-based.
bool split_key(std::string_view line, std::string_view& key, std::string_view& value, int& value_column) {
  auto c = line.find(':');
  if (c == std::string_view::npos) return false;
  key = trim(line.substr(0, c));
  value = line.substr(c + 1);
  value_column = static_cast<int>(c) + 2;
  return true;
}

Word parse_word_tokens(const Presentation& p, const std::vector<Token>& toks, int line) {
  std::vector<int> letters;
  for (const auto& t : toks) {
    std::string_view name = t.text;
    std::int64_t power = 1;
    if (auto caret = name.find('^'); caret != std::string_view::npos) {
      if (!parse_int(name.substr(caret + 1), power))
        throw ParseError("bad exponent in `" + std::string(t.text) + "`", line, t.column + static_cast<int>(caret) + 1);
      name = name.substr(0, caret);
    }
    const int g = p.index_of(std::string(name));
    if (g == 0) throw ParseError("unknown generator `" + std::string(name) + "`", line, t.column);
    if (power > 1000000 || power < -1000000) throw ParseError("exponent too large", line, t.column);
    for (std::int64_t i = 0; i < std::abs(power); ++i) letters.push_back(power > 0 ? g : -g);
  }
  return Word(std::move(letters));
}

BraidWord parse_braid_line(std::string_view value, std::string_view head, int line, int head_column) {
  BraidWord b;
  std::int64_t n = 0;
  auto ht = tokens_of(head, head_column);
  if (ht.size() != 2 || !parse_int(ht[1].text, n)) throw ParseError("expected `braid <strands>:`", line, head_column);
  if (n < 2 || n > 64) throw ParseError("braid needs 2..64 strands", line, ht[1].column);
  b.strands = static_cast<int>(n);
  for (const auto& t : tokens_of(value, static_cast<int>(head.size()) + head_column + 1)) {
    std::int64_t x = 0;
    if (!parse_int(t.text, x) || x == 0) throw ParseError("bad braid letter `" + std::string(t.text) + "`", line, t.column);
    if (std::abs(x) >= n)
      throw ParseError("braid letter " + std::string(t.text) + " out of range for " + std::to_string(n) + " strands",
                       line, t.column);
    b.letters.push_back(static_cast<int>(x));
  }
  return b;
}

}  // namespace

Word parse_word(const Presentation& p, std::string_view text) { return parse_word_tokens(p, tokens_of(text, 1), 0); }

std::string format_word(const Presentation& p, const Word& w) {
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const int run = static_cast<int>(j - i);
    const std::string& name = p.generators[std::abs(l[i]) - 1];
    if (!out.empty()) out += ' ';
    if (run == 1)
      out += l[i] > 0 ? name : name + "^-1";
    else
      out += name + "^" + std::to_string(l[i] > 0 ? run : -run);
    i = j;
  }
  return out;
}

BraidWord parse_braid(std::string_view text) {
  auto in = parse_input(text);
  if (auto* b = std::get_if<BraidWord>(&in)) return *b;
  throw ParseError("expected a braid", 0, 0);
}

KnotInput parse_input(std::string_view text) {
  auto lines = content_lines(text, "knot");
  if (lines.empty()) throw ParseError("empty input", 0, 0);
  {
    std::string_view key, value;
    int vc = 0;
    const Line& first = lines.front();
    if (split_key(first.text, key, value, vc) && key.starts_with("braid")) {
      if (lines.size() > 1) throw ParseError("unexpected content after braid line", lines[1].number, 1);
      const int kc = static_cast<int>(first.text.find('b')) + 1;
      return parse_braid_line(value, key, first.number, kc);
    }
  }

  Presentation p;
  bool have_gens = false, have_phi = false;
  std::vector<std::pair<std::string, int>> phi_raw;
  std::vector<ConjugationRelation> wirt;
  int wirt_line = 0;
  for (const auto& ln : lines) {
    std::string_view key, value;
    int vc = 0;
    if (!split_key(ln.text, key, value, vc)) throw ParseError("expected `key: value`", ln.number, 1);
    if (key == "gens") {
      if (have_gens) throw ParseError("duplicate gens line", ln.number, 1);
      have_gens = true;
      for (const auto& t : tokens_of(value, vc)) {
        if (!valid_name(t.text)) throw ParseError("invalid generator name `" + std::string(t.text) + "`", ln.number, t.column);
        if (p.index_of(std::string(t.text)) != 0)
          throw ParseError("duplicate generator `" + std::string(t.text) + "`", ln.number, t.column);
        p.generators.emplace_back(t.text);
      }
      continue;
    }
    if (key == "meridional") {
      auto v = trim(value);
      if (v != "yes" && v != "no") throw ParseError("meridional must be `yes` or `no`", ln.number, vc);
      p.meridional = v == "yes";
      continue;
    }
    if (key == "label") {
      p.label = std::string(trim(value));
      continue;
    }
    if (key == "kind") {
      auto v = trim(value);
      if (v == "closed")
        p.kind = ManifoldKind::Closed;
      else if (v == "boundary-tori")
        p.kind = ManifoldKind::BoundaryTori;
      else
        throw ParseError("kind must be `closed` or `boundary-tori`", ln.number, vc);
      continue;
    }
    if (!have_gens) throw ParseError("`" + std::string(key) + "` before gens line", ln.number, 1);
    if (key == "rel" || key == "wirtinger") {
      auto toks = tokens_of(value, vc);
      auto eq = std::find_if(toks.begin(), toks.end(), [](const Token& t) { return t.text == "="; });
      Word lhs = parse_word_tokens(p, {toks.begin(), eq}, ln.number);
      if (key == "wirtinger") {
        if (eq == toks.end()) throw ParseError("wirtinger relation needs `=`", ln.number, vc);
        Word rhs = parse_word_tokens(p, {eq + 1, toks.end()}, ln.number);
        try {
          wirt.push_back(as_conjugation(lhs, rhs));
        } catch (const InputError& e) {
          throw ParseError(e.what(), ln.number, vc);
        }
        wirt_line = ln.number;
        continue;
      }
      if (eq != toks.end()) {
        if (std::count_if(eq + 1, toks.end(), [](const Token& t) { return t.text == "="; }))
          throw ParseError("more than one `=`", ln.number, vc);
        Word rhs = parse_word_tokens(p, {eq + 1, toks.end()}, ln.number);
        lhs = lhs * rhs.inverse();
      }
      p.relators.push_back(lhs);
      continue;
    }
    if (key == "phi") {
      have_phi = true;
      for (const auto& t : tokens_of(value, vc)) {
        auto e = t.text.find('=');
        std::int64_t v = 0;
        if (e == std::string_view::npos || !parse_int(t.text.substr(e + 1), v))
          throw ParseError("expected `gen=value`", ln.number, t.column);
        const std::string name(t.text.substr(0, e));
        if (p.index_of(name) == 0) throw ParseError("unknown generator `" + name + "`", ln.number, t.column);
        phi_raw.emplace_back(name, static_cast<int>(v));
      }
      continue;
    }
    throw ParseError("unknown key `" + std::string(key) + "`", ln.number, 1);
  }
  if (!have_gens) throw ParseError("missing gens line", 0, 0);
  if (!wirt.empty()) {
    if (!p.relators.empty()) throw ParseError("cannot mix rel and wirtinger lines", wirt_line, 1);
    Presentation w = parse_wirtinger(p.generators, wirt, p.label);
    w.kind = p.kind;
    w.meridional = true;
    p = std::move(w);
  }
  if (have_phi) {
    p.phi.assign(p.generators.size(), 0);
    std::set<std::string> seen;
    for (const auto& [name, v] : phi_raw) {
      if (!seen.insert(name).second) throw ParseError("phi given twice for `" + name + "`", 0, 0);
      p.phi[p.index_of(name) - 1] = v;
    }
  }
  try {
    p.validate();
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0, 0);
  }
  return p;
}

Presentation to_presentation(const KnotInput& in) {
  if (auto* b = std::get_if<BraidWord>(&in)) return braid_to_presentation(*b);
  const auto& p = std::get<Presentation>(in);
  return derive_phi(p);
}

std::string print_presentation(const Presentation& p) {
  std::string out = "twistalex knot " + std::to_string(kFormatVersion) + "\n";
  if (!p.label.empty()) out += "label: " + p.label + "\n";
  out += "gens:";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators) out += "rel: " + format_word(p, r) + "\n";
  if (p.has_phi()) {
    out += "phi:";
    for (int i = 0; i < p.num_generators(); ++i) out += " " + p.generators[i] + "=" + std::to_string(p.phi[i]);
    out += "\n";
  }
  if (p.kind == ManifoldKind::Closed) out += "kind: closed\n";
  if (p.meridional) out += "meridional: yes\n";
  return out;
}

std::string print_braid(const BraidWord& b) {
  std::string out = "braid " + std::to_string(b.strands) + ":";
  for (int x : b.letters) out += " " + std::to_string(x);
  return out;
}

std::string print_input(const KnotInput& in) {
  if (auto* b = std::get_if<BraidWord>(&in))
    return "twistalex knot " + std::to_string(kFormatVersion) + "\n" + print_braid(*b) + "\n";
  return print_presentation(std::get<Presentation>(in));
}

Perm parse_cycles(std::string_view text, int k) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto s = trim(text);
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw InputError("expected `(` in cycle notation `" + std::string(s) + "`");
    auto close = s.find(')', i);
    if (close == std::string_view::npos) throw InputError("unclosed cycle in `" + std::string(s) + "`");
    std::vector<int> c;
    for (const auto& t : tokens_of(s.substr(i + 1, close - i - 1), 0)) {
      std::int64_t x = 0;
      if (!parse_int(t.text, x)) throw InputError("bad cycle point `" + std::string(t.text) + "`");
      c.push_back(static_cast<int>(x));
    }
    if (!c.empty()) cycles.push_back(std::move(c));
    i = close + 1;
  }
  return Perm::from_cycles(k, cycles);
}

PermHom parse_hom(const Presentation& p, std::string_view text) {
  auto lines = content_lines(text, "hom");
  std::optional<int> k;
  std::vector<std::pair<const Line*, std::pair<int, std::string_view>>> entries;
  int max_point = 1;
  for (const auto& ln : lines) {
    std::string_view key, value;
    int vc = 0;
    if (!split_key(ln.text, key, value, vc)) throw ParseError("expected `generator: cycles`", ln.number, 1);
    if (key == "degree") {
      std::int64_t v = 0;
      if (!parse_int(trim(value), v) || v < 1 || v > 255) throw ParseError("bad degree", ln.number, vc);
      k = static_cast<int>(v);
      continue;
    }
    const int g = p.index_of(std::string(key));
    if (g == 0) throw ParseError("unknown generator `" + std::string(key) + "`", ln.number, 1);
    entries.push_back({&ln, {g, value}});
    for (const auto& t : tokens_of(value, 0)) {
      std::string digits;
      for (char c : t.text)
        if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
      if (!digits.empty() && digits.size() < 4) max_point = std::max(max_point, std::stoi(digits));
    }
  }
  PermHom h;
  h.k = k.value_or(max_point);
  h.images.assign(p.num_generators(), Perm::identity(h.k));
  std::vector<bool> given(p.num_generators(), false);
  for (const auto& [ln, gv] : entries) {
    const auto [g, value] = gv;
    if (given[g - 1]) throw ParseError("generator `" + p.generators[g - 1] + "` listed twice", ln->number, 1);
    given[g - 1] = true;
    try {
      h.images[g - 1] = parse_cycles(value, h.k);
    } catch (const InputError& e) {
      throw ParseError(e.what(), ln->number, 1);
    }
  }
  for (int i = 0; i < p.num_generators(); ++i)
    if (!given[i]) throw ParseError("no image for generator `" + p.generators[i] + "`", 0, 0);
  if (!h.satisfies(p)) throw InputError("hom does not satisfy the relators");
  return h;
}

std::string print_hom(const Presentation& p, const PermHom& h) {
  std::string out = "twistalex hom " + std::to_string(kFormatVersion) + "\ndegree: " + std::to_string(h.k) + "\n";
  for (int i = 0; i < p.num_generators(); ++i) out += p.generators[i] + ": " + h.images[i].to_cycle_string() + "\n";
  return out;
}

std::string hom_summary(const Presentation& p, const PermHom& h) {
  std::string out;
  for (int i = 0; i < p.num_generators(); ++i)
    out += (i ? " " : "") + p.generators[i] + ":" + h.images[i].to_cycle_string();
  return out;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

std::vector<std::string_view> split_cells(std::string_view row) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  for (;;) {
    auto bar = row.find('|', pos);
    cells.push_back(trim(row.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos)));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return cells;
}

template <class T>
std::vector<T> int_list(std::string_view cell, const std::string& what) {
  std::vector<T> out;
  for (const auto& t : tokens_of(cell, 1)) {
    std::int64_t v = 0;
    if (!parse_int(t.text, v)) throw InputError("bad " + what + " value `" + std::string(t.text) + "`");
    out.push_back(static_cast<T>(v));
  }
  return out;
}

}  // namespace

std::vector<KnotTableEntry> parse_table(std::string_view text) {
  std::vector<KnotTableEntry> out;
  std::set<std::string> names;
  int row = 0;
  for (const auto& ln : content_lines(text, "table")) {
    ++row;
    try {
      auto cells = split_cells(ln.text);
      if (cells.size() < 2 || cells.size() > 8) throw InputError("expected 2 to 8 `|`-separated cells");
      cells.resize(8);
      KnotTableEntry e;
      e.name = std::string(cells[0]);
      if (e.name.empty()) throw InputError("empty name");
      if (!names.insert(e.name).second) throw InputError("duplicate entry `" + e.name + "`");
      std::string input(cells[1]);
      std::replace(input.begin(), input.end(), ';', '\n');
      e.input = parse_input(input);
      if (!cells[2].empty()) {
        auto g = int_list<std::int64_t>(cells[2], "genus");
        if (g.size() != 1 || g[0] < 0) throw InputError("genus must be one nonnegative integer");
        e.known_genus = g[0];
      }
      if (!cells[3].empty()) {
        if (cells[3] == "yes")
          e.known_fibered = true;
        else if (cells[3] == "no")
          e.known_fibered = false;
        else
          throw InputError("fibered must be `yes` or `no`");
      }
      if (!cells[4].empty()) e.classical_alexander = int_list<std::int64_t>(cells[4], "alexander");
      e.ks = int_list<int>(cells[5], "k");
      e.primes = int_list<std::uint32_t>(cells[6], "prime");
      for (auto q : e.primes)
        if (!is_prime(q)) throw InputError(std::to_string(q) + " is not prime");
      e.note = std::string(cells[7]);
      out.push_back(std::move(e));
    } catch (const ParseError& e) {
      throw ParseError("row " + std::to_string(row) + ": " + e.what(), ln.number, 0);
    } catch (const InputError& e) {
      throw ParseError("row " + std::to_string(row) + ": " + e.what(), ln.number, 0);
    }
  }
  return out;
}

std::vector<KnotTableEntry> load_table(const std::filesystem::path& path) { return parse_table(read_file(path)); }

std::string print_table(const std::vector<KnotTableEntry>& entries) {
  std::string out = "twistalex table " + std::to_string(kFormatVersion) + "\n";
  auto join = [](const auto& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  for (const auto& e : entries) {
    std::string input;
    if (auto* b = std::get_if<BraidWord>(&e.input)) {
      input = print_braid(*b);
    } else {
      std::string body = print_presentation(std::get<Presentation>(e.input));
      body = body.substr(body.find('\n') + 1);
      if (!body.empty() && body.back() == '\n') body.pop_back();
      std::replace(body.begin(), body.end(), '\n', ';');
      input = body;
    }
    out += e.name + " | " + input + " | " + (e.known_genus ? std::to_string(*e.known_genus) : "") + " | " +
           (e.known_fibered ? (*e.known_fibered ? "yes" : "no") : "") + " | " +
           (e.classical_alexander ? join(*e.classical_alexander) : "") + " | " + join(e.ks) + " | " + join(e.primes) +
           " | " + e.note + "\n";
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string content_hash(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 15];
  return out;
}

// ---------------------------------------------------------------------------
// Reports

HomDoc hom_doc(const Presentation& p, const PermHom& h) {
  HomDoc d;
  d.k = h.k;
  for (int i = 0; i < p.num_generators(); ++i) d.images.emplace_back(p.generators[i], h.images[i].to_cycle_string());
  return d;
}

void set_invariants(ReportDocument& doc, const TwistedDegrees& d) {
  doc.field = d.field.name();
  doc.degrees = {d.deg_d0, d.deg_d1, d.deg_d2, d.deg_d1_torsion};
  doc.polynomials = {{"delta0", d.delta0}, {"delta1", d.delta1}, {"delta1torsion", d.delta1_torsion}};
  if (d.deg_d2) doc.polynomials["delta2"] = d.delta2;
  doc.torsion_degree = d.torsion_degree;
  doc.norm_bound = d.norm_bound ? std::optional(d.norm_bound->str()) : std::nullopt;
  if (d.genus_bound) {
    doc.genus_rational = d.genus_bound->value.str();
    doc.genus_rounded = d.genus_bound->rounded;
  } else {
    doc.genus_rational.reset();
    doc.genus_rounded.reset();
  }
  doc.boundary_class_bound = d.boundary_class_bound.str();
}

VerdictDoc verdict_doc(const Presentation& p, const FiberingVerdict& v) {
  VerdictDoc d;
  d.status = to_string(v.status);
  d.complete = v.complete;
  d.tasks_evaluated = v.tasks_evaluated;
  if (v.certificate) {
    const auto& c = *v.certificate;
    CertificateDoc cd;
    cd.hom = hom_doc(p, c.hom);
    cd.flavor = to_string(c.flavor);
    cd.p = c.prime;
    cd.k = c.hom.k;
    cd.dim = c.k;
    cd.degrees = {c.deg_d0, c.deg_d1, c.deg_d2, std::nullopt};
    cd.delta1_vanishes = c.delta1_vanishes;
    if (c.twisted_side) cd.twisted_side = c.twisted_side->str();
    cd.untwisted_side = c.untwisted_side.str();
    d.certificate = cd;
  }
  NeuwirthDoc n;
  n.alexander = v.neuwirth.alexander;
  n.degree = v.neuwirth.degree;
  n.monic = v.neuwirth.monic;
  n.known_genus = v.neuwirth.known_genus;
  n.satisfied = v.neuwirth.satisfied;
  d.neuwirth = n;
  return d;
}

ReportDocument report_for(const std::string& command, const std::string& input_name, std::string_view input_text,
                          const Presentation& p) {
  ReportDocument d;
  d.command = command;
  d.input = input_name;
  d.input_hash = content_hash(input_text);
  d.phi = p.phi;
  d.kind = to_string(p.kind);
  return d;
}

namespace {

template <class T>
ojson opt(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

template <class T>
std::optional<T> get_opt(const ojson& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

ojson to_json(const DegreeSet& d) {
  return {{"d0", opt(d.d0)}, {"d1", opt(d.d1)}, {"d2", opt(d.d2)}, {"d1torsion", opt(d.d1torsion)}};
}

DegreeSet degrees_from(const ojson& j) {
  return {get_opt<int>(j, "d0"), get_opt<int>(j, "d1"), get_opt<int>(j, "d2"), get_opt<int>(j, "d1torsion")};
}

ojson to_json(const HomDoc& h) {
  ojson images = ojson::object();
  for (const auto& [g, c] : h.images) images[g] = c;
  return {{"k", h.k}, {"images", images}};
}

HomDoc hom_from(const ojson& j) {
  HomDoc h;
  h.k = j.at("k").get<int>();
  for (const auto& [g, c] : j.at("images").items()) h.images.emplace_back(g, c.get<std::string>());
  return h;
}

ojson to_json(const CertificateDoc& c) {
  return {{"hom", to_json(c.hom)},
          {"flavor", c.flavor},
          {"k", c.k},
          {"p", c.p},
          {"dim", c.dim},
          {"degD0", opt(c.degrees.d0)},
          {"degD1", opt(c.degrees.d1)},
          {"degD2", opt(c.degrees.d2)},
          {"delta1Vanishes", c.delta1_vanishes},
          {"twistedSide", opt(c.twisted_side)},
          {"untwistedSide", c.untwisted_side}};
}

CertificateDoc certificate_from(const ojson& j) {
  CertificateDoc c;
  c.hom = hom_from(j.at("hom"));
  c.flavor = j.at("flavor").get<std::string>();
  c.k = j.at("k").get<int>();
  c.p = j.at("p").get<std::uint32_t>();
  c.dim = j.at("dim").get<int>();
  c.degrees = {get_opt<int>(j, "degD0"), get_opt<int>(j, "degD1"), get_opt<int>(j, "degD2"), std::nullopt};
  c.delta1_vanishes = j.at("delta1Vanishes").get<bool>();
  c.twisted_side = get_opt<std::string>(j, "twistedSide");
  c.untwisted_side = j.at("untwistedSide").get<std::string>();
  return c;
}

ojson to_json(const VerdictDoc& v) {
  ojson j = {{"status", v.status},
             {"certificate", v.certificate ? to_json(*v.certificate) : ojson(nullptr)},
             {"neuwirth", nullptr},
             {"complete", v.complete},
             {"tasksEvaluated", v.tasks_evaluated}};
  if (v.neuwirth)
    j["neuwirth"] = {{"alexander", v.neuwirth->alexander},
                     {"degree", opt(v.neuwirth->degree)},
                     {"monic", v.neuwirth->monic},
                     {"knownGenus", opt(v.neuwirth->known_genus)},
                     {"satisfied", opt(v.neuwirth->satisfied)}};
  return j;
}

VerdictDoc verdict_from(const ojson& j) {
  VerdictDoc v;
  v.status = j.at("status").get<std::string>();
  if (!j.at("certificate").is_null()) v.certificate = certificate_from(j.at("certificate"));
  if (!j.at("neuwirth").is_null()) {
    const auto& n = j.at("neuwirth");
    v.neuwirth = NeuwirthDoc{n.at("alexander").get<std::string>(), get_opt<int>(n, "degree"), n.at("monic").get<bool>(),
                             get_opt<std::int64_t>(n, "knownGenus"), get_opt<bool>(n, "satisfied")};
  }
  v.complete = j.at("complete").get<bool>();
  v.tasks_evaluated = j.at("tasksEvaluated").get<std::uint64_t>();
  return v;
}

ojson to_json(const SearchDoc& s) {
  ojson homs = ojson::array();
  for (const auto& h : s.homs) homs.push_back(to_json(h));
  return {{"status", s.status},
          {"evaluated", s.evaluated},
          {"knownGenus", opt(s.known_genus)},
          {"certified", opt(s.certified)},
          {"classicalGenusBound", opt(s.classical_genus_bound)},
          {"homs", homs}};
}

SearchDoc search_from(const ojson& j) {
  SearchDoc s;
  s.status = j.at("status").get<std::string>();
  s.evaluated = j.at("evaluated").get<std::uint64_t>();
  s.known_genus = get_opt<std::int64_t>(j, "knownGenus");
  s.certified = get_opt<bool>(j, "certified");
  s.classical_genus_bound = get_opt<std::string>(j, "classicalGenusBound");
  for (const auto& h : j.at("homs")) s.homs.push_back(hom_from(h));
  return s;
}

ojson to_json(const ReportDocument& d) {
  ojson polys = ojson::object();
  for (const auto& [k, v] : d.polynomials) polys[k] = v;
  ojson timings = ojson::object();
  for (const auto& [k, v] : d.timings_ms) timings[k] = v;
  ojson genus = nullptr;
  if (d.genus_rational) genus = {{"rational", *d.genus_rational}, {"rounded", opt(d.genus_rounded)}};
  return {{"schema", "twistalex-report/" + std::to_string(kFormatVersion)},
          {"command", d.command},
          {"input", {{"name", d.input}, {"hash", d.input_hash}}},
          {"phi", d.phi},
          {"kind", d.kind},
          {"hom", d.hom ? to_json(*d.hom) : ojson(nullptr)},
          {"flavor", d.flavor},
          {"field", d.field},
          {"degrees", to_json(d.degrees)},
          {"polynomials", polys},
          {"torsionDegree", opt(d.torsion_degree)},
          {"normBound", opt(d.norm_bound)},
          {"genusBound", genus},
          {"boundaryClassBound", opt(d.boundary_class_bound)},
          {"verdict", d.verdict ? to_json(*d.verdict) : ojson(nullptr)},
          {"search", d.search ? to_json(*d.search) : ojson(nullptr)},
          {"assumptions", d.assumptions},
          {"timings", timings}};
}

std::string text_of(const ReportDocument& d) {
  std::ostringstream o;
  auto deg = [](std::optional<int> x) { return degree_string(x); };
  o << d.command << ": " << d.input << " (" << d.kind << ")\n";
  if (d.hom) {
    o << "  hom (S" << d.hom->k << "):";
    for (const auto& [g, c] : d.hom->images) o << " " << g << ":" << c;
    o << "\n";
  }
  if (!d.field.empty()) {
    o << "  flavor " << d.flavor << " over " << d.field << "\n";
    for (const auto& key : {"delta0", "delta1", "delta2", "delta1torsion"})
      if (auto it = d.polynomials.find(key); it != d.polynomials.end()) o << "  " << key << " = " << it->second << "\n";
    o << "  degrees: d0 " << deg(d.degrees.d0) << ", d1 " << deg(d.degrees.d1) << ", d2 " << deg(d.degrees.d2)
      << ", d1torsion " << deg(d.degrees.d1torsion) << "\n";
    o << "  torsion degree " << deg(d.torsion_degree) << ", norm bound " << d.norm_bound.value_or("unavailable");
    if (d.genus_rational) o << ", genus bound " << *d.genus_rational << " (rounded " << *d.genus_rounded << ")";
    o << "\n";
  }
  if (d.search) {
    o << "  search " << d.search->status << ", " << d.search->evaluated << " evaluated";
    if (d.search->known_genus)
      o << ", known genus " << *d.search->known_genus << (d.search->certified.value_or(false) ? " certified" : " not certified");
    o << "\n";
    for (const auto& h : d.search->homs) {
      o << "  hom:";
      for (const auto& [g, c] : h.images) o << " " << g << ":" << c;
      o << "\n";
    }
  }
  if (d.verdict) {
    const auto& v = *d.verdict;
    o << "  verdict: " << v.status << (v.complete ? "" : " (search incomplete)") << ", " << v.tasks_evaluated
      << " tasks\n";
    if (v.certificate) {
      const auto& c = *v.certificate;
      o << "  certificate: S" << c.k << " " << c.flavor << " over F" << c.p << ", deg d0 " << deg(c.degrees.d0)
        << ", d1 " << deg(c.degrees.d1) << ", d2 " << deg(c.degrees.d2) << "; twisted side "
        << c.twisted_side.value_or("undefined (delta1 = 0)") << " vs untwisted " << c.untwisted_side << "\n";
      o << "  certificate hom:";
      for (const auto& [g, cyc] : c.hom.images) o << " " << g << ":" << cyc;
      o << "\n";
    }
    if (v.neuwirth)
      o << "  classical " << v.neuwirth->alexander << " (degree " << deg(v.neuwirth->degree)
        << (v.neuwirth->monic ? ", monic" : ", not monic") << ")\n";
  }
  for (const auto& a : d.assumptions) o << "  assumption: " << a << "\n";
  for (const auto& [k, v] : d.timings_ms) o << "  time " << k << ": " << v << " ms\n";
  return o.str();
}

}  // namespace

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(doc).dump(2) + "\n";
  return text_of(doc);
}

std::string emit_reports(const std::vector<ReportDocument>& docs, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ojson arr = ojson::array();
    for (const auto& d : docs) arr.push_back(to_json(d));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) out += (i ? "\n" : "") + text_of(docs[i]);
  return out;
}

ReportDocument parse_report(std::string_view json_text) {
  ojson j;
  try {
    j = ojson::parse(json_text);
  } catch (const std::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  try {
    ReportDocument d;
    d.command = j.at("command").get<std::string>();
    d.input = j.at("input").at("name").get<std::string>();
    d.input_hash = j.at("input").at("hash").get<std::string>();
    d.phi = j.at("phi").get<std::vector<std::int64_t>>();
    d.kind = j.at("kind").get<std::string>();
    if (!j.at("hom").is_null()) d.hom = hom_from(j.at("hom"));
    d.flavor = j.at("flavor").get<std::string>();
    d.field = j.at("field").get<std::string>();
    d.degrees = degrees_from(j.at("degrees"));
    for (const auto& [k, v] : j.at("polynomials").items()) d.polynomials[k] = v.get<std::string>();
    d.torsion_degree = get_opt<int>(j, "torsionDegree");
    d.norm_bound = get_opt<std::string>(j, "normBound");
    if (!j.at("genusBound").is_null()) {
      d.genus_rational = j.at("genusBound").at("rational").get<std::string>();
      d.genus_rounded = get_opt<std::int64_t>(j.at("genusBound"), "rounded");
    }
    d.boundary_class_bound = get_opt<std::string>(j, "boundaryClassBound");
    if (!j.at("verdict").is_null()) d.verdict = verdict_from(j.at("verdict"));
    if (!j.at("search").is_null()) d.search = search_from(j.at("search"));
    d.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    for (const auto& [k, v] : j.at("timings").items()) d.timings_ms.emplace_back(k, v.get<std::int64_t>());
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

}  // namespace twistalex
