#include "exlie/lie_labels.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "exlie/error.hpp"

namespace exlie {

using Family = LieTerm::Family;

namespace {

std::string clean(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (ch == ' ') continue;
    // U+2295 ⊕ (E2 8A 95) and U+2212 − (E2 88 92).
    if (ch == 0xE2 && i + 2 < text.size()) {
      unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      unsigned char b2 = static_cast<unsigned char>(text[i + 2]);
      if (b1 == 0x8A && b2 == 0x95) {
        out.push_back('+');
        i += 2;
        continue;
      }
      if (b1 == 0x88 && b2 == 0x92) {
        out.push_back('-');
        i += 2;
        continue;
      }
    }
    out.push_back(static_cast<char>(ch));
  }
  return out;
}

const std::map<std::string, long>& exceptional_dims() {
  static const std::map<std::string, long> dims = {
      {"G2(2)", 14},    {"G2(-14)", 14},  {"F4(4)", 52},    {"F4(-20)", 52},
      {"F4(-52)", 52},  {"E6(6)", 78},    {"E6(2)", 78},    {"E6(-14)", 78},
      {"E6(-26)", 78},  {"E6(-78)", 78},  {"E7(7)", 133},   {"E7(-5)", 133},
      {"E7(-25)", 133}, {"E7(-133)", 133}, {"E8(8)", 248},  {"E8(-24)", 248},
      {"E8(-248)", 248}};
  return dims;
}

LieTerm parse_term(const std::string& raw) {
  std::string s = raw;
  LieTerm t;
  for (const char* suf : {"_L", "_S"}) {
    if (s.size() > 2 && s.compare(s.size() - 2, 2, suf) == 0) {
      t.suffix = suf;
      s.erase(s.size() - 2);
    }
  }
  static const std::regex kTwo(R"((sl|su|so)\((\d+),(\d+)\))");
  static const std::regex kSlReal(R"(sl\((\d+),R\))");
  static const std::regex kSlComplex(R"(sl\((\d+),C\)(?:_R)?)");
  static const std::regex kOne(R"((su|so|usp|su\*|so\*)\((\d+)\))");
  static const std::regex kSp(R"(sp\((\d+),R\))");
  static const std::regex kExc(R"((G2|F4|E6|E7|E8)\((-?\d+)\))");
  std::smatch m;
  if (s == "u(1)") {
    t.family = Family::kU1;
    return t;
  }
  if (s == "so(1,1)") {
    t.family = Family::kSo11;
    return t;
  }
  if (std::regex_match(s, m, kSlReal)) {
    t.family = Family::kSlR;
    t.p = std::stoi(m[1]);
    return t;
  }
  if (std::regex_match(s, m, kSlComplex)) {
    t.family = Family::kSlC;
    t.p = std::stoi(m[1]);
    return t;
  }
  if (std::regex_match(s, m, kSp)) {
    t.family = Family::kSpR;
    t.p = std::stoi(m[1]);
    return t;
  }
  if (std::regex_match(s, m, kTwo)) {
    std::string f = m[1];
    if (f == "sl") throw Error(ErrorKind::kUnknownLabel, "unknown Lie label '" + raw + "'");
    t.family = f == "su" ? Family::kSu : Family::kSo;
    t.p = std::stoi(m[2]);
    t.q = std::stoi(m[3]);
    return t;
  }
  if (std::regex_match(s, m, kOne)) {
    std::string f = m[1];
    int n = std::stoi(m[2]);
    if (f == "su") t.family = Family::kSu;
    else if (f == "so") t.family = Family::kSo;
    else if (f == "usp") t.family = Family::kUsp;
    else if (f == "su*") t.family = Family::kSuStar;
    else t.family = Family::kSoStar;
    t.p = n;
    if ((t.family == Family::kUsp || t.family == Family::kSuStar ||
         t.family == Family::kSoStar) &&
        n % 2 != 0) {
      throw Error(ErrorKind::kUnknownLabel, "odd matrix size in '" + raw + "'");
    }
    return t;
  }
  if (std::regex_match(s, m, kExc)) {
    std::string name = std::string(m[1]) + "(" + std::string(m[2]) + ")";
    if (!exceptional_dims().count(name)) {
      throw Error(ErrorKind::kUnknownLabel, "unknown real form '" + raw + "'");
    }
    t.family = Family::kExceptional;
    t.exceptional = name;
    return t;
  }
  throw Error(ErrorKind::kUnknownLabel, "unknown Lie label '" + raw + "'");
}

LieTerm make(Family f, int p, int q = 0) {
  LieTerm t;
  t.family = f;
  t.p = p;
  t.q = q;
  return t;
}

}  // namespace

std::vector<LieTerm> parse_lie_label(const std::string& text) {
  std::string s = clean(text);
  std::vector<LieTerm> out;
  if (s.empty() || s == "0" || s == "\xE2\x88\x85" /* ∅ */) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('+', start);
    if (end == std::string::npos) end = s.size();
    std::string piece = s.substr(start, end - start);
    if (piece.empty()) throw Error(ErrorKind::kUnknownLabel, "empty summand in '" + text + "'");
    if (piece != "0") out.push_back(parse_term(piece));
    start = end + 1;
  }
  return out;
}

LieTerm canonical_term(const LieTerm& in) {
  LieTerm t = in;
  // Order signatures larger-first; fold compact spellings.
  if ((t.family == Family::kSu || t.family == Family::kSo) && t.q > t.p) std::swap(t.p, t.q);
  auto keep_suffix = [&](LieTerm r) {
    r.suffix = in.suffix;
    return r;
  };
  switch (t.family) {
    case Family::kSuStar:
      if (t.p == 2) return keep_suffix(make(Family::kSu, 2));
      if (t.p == 4) return keep_suffix(make(Family::kSo, 5, 1));
      break;
    case Family::kSlC:
      if (t.p == 2) return keep_suffix(make(Family::kSo, 3, 1));
      break;
    case Family::kSlR:
      if (t.p == 4) return keep_suffix(make(Family::kSo, 3, 3));
      break;
    case Family::kSu:
      if (t.p == 2 && t.q == 2) return keep_suffix(make(Family::kSo, 4, 2));
      if (t.p == 4 && t.q == 0) return keep_suffix(make(Family::kSo, 6));
      if (t.p == 1 && t.q == 1) return keep_suffix(make(Family::kSlR, 2));
      break;
    case Family::kSo:
      if (t.p == 2 && t.q == 0) return keep_suffix(make(Family::kU1, 0));
      if (t.p == 3 && t.q == 0) return keep_suffix(make(Family::kSu, 2));
      if (t.p == 2 && t.q == 1) return keep_suffix(make(Family::kSlR, 2));
      if (t.p == 1 && t.q == 1) return keep_suffix(make(Family::kSo11, 0));
      if (t.p == 3 && t.q == 2) return keep_suffix(make(Family::kSpR, 2));
      break;
    case Family::kSpR:
      if (t.p == 1) return keep_suffix(make(Family::kSlR, 2));
      break;
    case Family::kUsp:
      if (t.p == 2) return keep_suffix(make(Family::kSu, 2));
      if (t.p == 4) return keep_suffix(make(Family::kSo, 5));
      break;
    case Family::kSoStar:
      if (t.p == 8) return keep_suffix(make(Family::kSo, 6, 2));
      if (t.p == 6) return keep_suffix(make(Family::kSu, 3, 1));
      break;
    default:
      break;
  }
  return t;
}

std::string term_string(const LieTerm& t) {
  std::string body;
  auto sig = [&](const char* name) {
    if (t.q == 0) return std::string(name) + "(" + std::to_string(t.p) + ")";
    return std::string(name) + "(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
  };
  switch (t.family) {
    case Family::kSlR: body = "sl(" + std::to_string(t.p) + ",R)"; break;
    case Family::kSlC: body = "sl(" + std::to_string(t.p) + ",C)_R"; break;
    case Family::kSu: body = sig("su"); break;
    case Family::kSuStar: body = "su*(" + std::to_string(t.p) + ")"; break;
    case Family::kSo: body = sig("so"); break;
    case Family::kSoStar: body = "so*(" + std::to_string(t.p) + ")"; break;
    case Family::kSpR: body = "sp(" + std::to_string(t.p) + ",R)"; break;
    case Family::kUsp: body = "usp(" + std::to_string(t.p) + ")"; break;
    case Family::kU1: body = "u(1)"; break;
    case Family::kSo11: body = "so(1,1)"; break;
    case Family::kExceptional: body = t.exceptional; break;
  }
  return body + t.suffix;
}

std::string canonical_label(const std::vector<LieTerm>& terms) {
  std::vector<std::string> parts;
  for (const LieTerm& t : terms) parts.push_back(term_string(canonical_term(t)));
  if (parts.empty()) return "0";
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "+";
    out += parts[i];
  }
  return out;
}

std::string canonical_label(const std::string& text) {
  return canonical_label(parse_lie_label(text));
}

long lie_dim(const LieTerm& t) {
  long p = t.p, q = t.q, n = p + q;
  switch (t.family) {
    case Family::kSlR: return p * p - 1;
    case Family::kSlC: return 2 * (p * p - 1);
    case Family::kSu: return n * n - 1;
    case Family::kSuStar: return p * p - 1;
    case Family::kSo: return n * (n - 1) / 2;
    case Family::kSoStar: return p * (p - 1) / 2;
    case Family::kSpR: return p * (2 * p + 1);
    case Family::kUsp: return (p / 2) * (p + 1);
    case Family::kU1:
    case Family::kSo11: return 1;
    case Family::kExceptional: return exceptional_dims().at(t.exceptional);
  }
  return 0;
}

long lie_dim(const std::string& label) {
  long total = 0;
  for (const LieTerm& t : parse_lie_label(label)) total += lie_dim(t);
  return total;
}

std::vector<std::string> normalize_dynkin(char family, int rank) {
  auto one = [](char f, int r) { return std::vector<std::string>{std::string(1, f) + std::to_string(r)}; };
  switch (family) {
    case 'A':
      if (rank <= 0) return {};
      return one('A', rank);
    case 'B':
      if (rank <= 0) return {};
      if (rank == 1) return one('A', 1);
      return one('B', rank);
    case 'C':
      if (rank <= 0) return {};
      if (rank == 1) return one('A', 1);
      if (rank == 2) return one('B', 2);
      return one('C', rank);
    case 'D':
      if (rank <= 1) return {};
      if (rank == 2) return {"A1", "A1"};
      if (rank == 3) return one('A', 3);
      return one('D', rank);
    default:
      return one(family, rank);
  }
}

std::string ComplexType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    if (i) out += "+";
    out += simple[i];
  }
  if (abelian_rank > 0) {
    if (!out.empty()) out += "+";
    out += "T" + std::to_string(abelian_rank);
  }
  return out.empty() ? "0" : out;
}

ComplexType complexify(const LieTerm& t) {
  ComplexType c;
  auto orth = [&](int n) {
    // so(n, C): n = 2 is abelian.
    if (n == 2) {
      c.abelian_rank = 1;
      return;
    }
    c.simple = n % 2 ? normalize_dynkin('B', (n - 1) / 2) : normalize_dynkin('D', n / 2);
  };
  switch (t.family) {
    case Family::kSlR:
    case Family::kSuStar: c.simple = normalize_dynkin('A', t.p - 1); break;
    case Family::kSu: c.simple = normalize_dynkin('A', t.p + t.q - 1); break;
    case Family::kSlC: {
      auto a = normalize_dynkin('A', t.p - 1);
      c.simple = a;
      c.simple.insert(c.simple.end(), a.begin(), a.end());
      break;
    }
    case Family::kSo: orth(t.p + t.q); break;
    case Family::kSoStar: orth(t.p); break;
    case Family::kSpR: c.simple = normalize_dynkin('C', t.p); break;
    case Family::kUsp: c.simple = normalize_dynkin('C', t.p / 2); break;
    case Family::kU1:
    case Family::kSo11: c.abelian_rank = 1; break;
    case Family::kExceptional: c.simple = {t.exceptional.substr(0, 2)}; break;
  }
  std::sort(c.simple.begin(), c.simple.end());
  return c;
}

ComplexType complexify(const std::vector<LieTerm>& terms) {
  ComplexType total;
  for (const LieTerm& t : terms) {
    ComplexType c = complexify(t);
    total.simple.insert(total.simple.end(), c.simple.begin(), c.simple.end());
    total.abelian_rank += c.abelian_rank;
  }
  std::sort(total.simple.begin(), total.simple.end());
  return total;
}

}  // namespace exlie
