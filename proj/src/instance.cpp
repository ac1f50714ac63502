#include "bsc/instance.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace bsc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// "k1=v1 k2=v2" -> map; duplicate or malformed pairs throw.
std::map<std::string, std::string> parse_pairs(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
      throw std::invalid_argument("expected key=value, got '" + tok + "'");
    if (!out.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
      throw std::invalid_argument("duplicate key '" + tok.substr(0, eq) + "'");
  }
  return out;
}

std::string take(std::map<std::string, std::string>& kv, const std::string& key, bool required = true) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (required) throw std::invalid_argument("missing " + key + "=");
    return "";
  }
  std::string v = it->second;
  kv.erase(it);
  return v;
}

void no_extra(const std::map<std::string, std::string>& kv) {
  if (!kv.empty()) throw std::invalid_argument("unknown key '" + kv.begin()->first + "'");
}

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) out.push_back(parse_long(item));
  if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list");
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw std::invalid_argument("expected yes or no, got '" + s + "'");
}

std::string join_longs(const std::vector<long>& v, char sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? std::string(1, sep) : "") + std::to_string(v[k]);
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  return join_longs(std::vector<long>(v.begin(), v.end()), ',');
}

struct PendingTerm {
  IntVec lambda;
  std::string coeff;
  int line;
};

}  // namespace

std::vector<Rat> parse_rat_row(const std::string& text) {
  std::vector<Rat> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(Rat::parse(tok));
  if (out.empty()) throw std::invalid_argument("expected at least one rational");
  return out;
}

std::string rat_row_str(const std::vector<Rat>& row) {
  std::string out;
  for (std::size_t k = 0; k < row.size(); ++k) out += (k ? " " : "") + row[k].str();
  return out;
}

std::vector<Instance> parse_instances(std::istream& in, const std::string& source) {
  std::vector<Instance> out;
  std::optional<Instance> cur;
  std::vector<PendingTerm> terms;
  bool have_field = false;
  int open_line = 0;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      if (line == "end") {
        if (!cur) throw std::invalid_argument("'end' without an open instance");
        if (!have_field) throw std::invalid_argument("instance '" + cur->id + "' has no field line");
        if (cur->group.empty()) throw std::invalid_argument("instance '" + cur->id + "' has no group line");
        if (cur->weights && cur->jumps) throw std::invalid_argument("give only one of highest-weight and jumps");
        if (cur->zeta && cur->wd) throw std::invalid_argument("give only one of zeta and Weil-Deligne data");
        if (cur->wd) cur->wd->field = cur->field;
        for (const auto& t : terms) {
          try {
            cur->terms.emplace_back(t.lambda, QSqrtQ::parse(t.coeff, cur->field.q()));
          } catch (const std::exception& e) {
            throw ParseError(source, t.line, e.what());
          }
        }
        out.push_back(std::move(*cur));
        cur.reset();
        terms.clear();
        continue;
      }
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("expected 'key: value'");
      const std::string key = trim(line.substr(0, colon));
      const std::string value = trim(line.substr(colon + 1));
      if (key == "instance") {
        if (cur) throw std::invalid_argument("instance '" + cur->id + "' is not closed by 'end'");
        if (value.empty() || value.find_first_of(" \t") != std::string::npos)
          throw std::invalid_argument("instance id must be a single nonempty word");
        cur = Instance{};
        cur->id = value;
        have_field = false;
        open_line = lineno;
        continue;
      }
      if (!cur) throw std::invalid_argument("'" + key + "' outside an instance block");
      if (key == "field") {
        auto kv = parse_pairs(value);
        const long p = parse_long(take(kv, "p"));
        const long e = parse_long(take(kv, "e"));
        const long f = parse_long(take(kv, "f"));
        no_extra(kv);
        if (p < 2 || e < 1 || f < 1) throw std::invalid_argument("field needs p >= 2, e >= 1, f >= 1");
        cur->field = FieldData(static_cast<unsigned long>(p), static_cast<int>(e), static_cast<int>(f));
        have_field = true;
      } else if (key == "group") {
        (void)RootDatum::preset(value);
        cur->group = value;
      } else if (key == "highest-weight") {
        if (!cur->weights) cur->weights.emplace();
        cur->weights->push_back(parse_rat_row(value));
      } else if (key == "jumps") {
        if (!cur->jumps) cur->jumps.emplace();
        cur->jumps->push_back(parse_rat_row(value));
      } else if (key == "zeta") {
        if (cur->zeta) throw std::invalid_argument("duplicate zeta line");
        cur->zeta = parse_rat_row(value);
      } else if (key == "frobenius" || key == "chain" || key == "irreducible" || key == "ramified") {
        if (!cur->wd) cur->wd.emplace();
        auto kv = key == "ramified" ? std::map<std::string, std::string>{} : parse_pairs(value);
        if (key == "frobenius") {
          FrobeniusBlock b;
          b.valuation = Rat::parse(take(kv, "v"));
          const std::string mult = take(kv, "mult", false);
          b.multiplicity = mult.empty() ? 1 : static_cast<int>(parse_long(mult));
          const std::string jordan = take(kv, "jordan", false);
          if (!jordan.empty())
            for (long part : parse_long_list(jordan)) b.jordan.push_back(static_cast<int>(part));
          no_extra(kv);
          cur->wd->frobenius.push_back(std::move(b));
        } else if (key == "chain") {
          WDChain c;
          c.base_valuation = Rat::parse(take(kv, "v"));
          c.length = static_cast<int>(parse_long(take(kv, "length")));
          no_extra(kv);
          cur->wd->chains.push_back(c);
        } else if (key == "irreducible") {
          IrreducibleSummand s;
          s.dim = static_cast<int>(parse_long(take(kv, "dim")));
          s.det_valuation = Rat::parse(take(kv, "det"));
          no_extra(kv);
          cur->wd->irreducible.push_back(s);
        } else {
          cur->wd->ramified = parse_bool(value);
        }
      } else if (key == "spectral") {
        if (cur->spectral) throw std::invalid_argument("duplicate spectral line");
        cur->spectral = parse_rat_row(value);
      } else if (key == "normalized") {
        cur->normalized = parse_bool(value);
      } else if (key == "term") {
        auto kv = parse_pairs(value);
        PendingTerm t{parse_long_list(take(kv, "lambda")), take(kv, "coeff"), lineno};
        no_extra(kv);
        terms.push_back(std::move(t));
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  if (cur) throw ParseError(source, open_line, "instance '" + cur->id + "' is not closed by 'end'");
  return out;
}

std::vector<Instance> load_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_instances(in, path);
}

std::string serialize(const Instance& inst) {
  std::ostringstream os;
  os << "instance: " << inst.id << '\n';
  os << "field: p=" << inst.field.p << " e=" << inst.field.e << " f=" << inst.field.f << '\n';
  os << "group: " << inst.group << '\n';
  if (inst.weights)
    for (const auto& row : *inst.weights) os << "highest-weight: " << rat_row_str(row) << '\n';
  if (inst.jumps)
    for (const auto& row : *inst.jumps) os << "jumps: " << rat_row_str(row) << '\n';
  if (inst.zeta) os << "zeta: " << rat_row_str(*inst.zeta) << '\n';
  if (inst.wd) {
    for (const auto& b : inst.wd->frobenius) {
      os << "frobenius: v=" << b.valuation << " mult=" << b.multiplicity;
      if (!b.jordan.empty()) os << " jordan=" << join_ints(b.jordan);
      os << '\n';
    }
    for (const auto& c : inst.wd->chains) os << "chain: v=" << c.base_valuation << " length=" << c.length << '\n';
    for (const auto& s : inst.wd->irreducible) os << "irreducible: dim=" << s.dim << " det=" << s.det_valuation << '\n';
    if (inst.wd->ramified) os << "ramified: yes\n";
  }
  if (inst.spectral) os << "spectral: " << rat_row_str(*inst.spectral) << '\n';
  if (inst.spectral || !inst.terms.empty()) os << "normalized: " << (inst.normalized ? "yes" : "no") << '\n';
  for (const auto& [lambda, c] : inst.terms) os << "term: lambda=" << join_longs(lambda, ',') << " coeff=" << c.str() << '\n';
  os << "end\n";
  return os.str();
}

std::string serialize(const std::vector<Instance>& insts) {
  std::string out;
  for (std::size_t k = 0; k < insts.size(); ++k) out += (k ? "\n" : "") + serialize(insts[k]);
  return out;
}

}  // namespace bsc
