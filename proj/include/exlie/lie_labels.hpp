#pragma once

// Real Lie algebra labels as they appear in the tables: parsing, dimension,
// complexification and canonical spelling under low-rank isomorphisms.

#include <string>
#include <vector>

namespace exlie {

struct LieTerm {
  enum class Family {
    kSlR,      // sl(n,R)
    kSlC,      // sl(n,C)_R, the complex algebra viewed as real
    kSu,       // su(p,q), su(n)
    kSuStar,   // su*(2n), stored by matrix size
    kSo,       // so(p,q), so(n)
    kSoStar,   // so*(2n), stored by matrix size
    kSpR,      // sp(n,R)
    kUsp,      // usp(2n), stored by matrix size
    kU1,       // u(1)
    kSo11,     // so(1,1)
    kExceptional,
  };
  Family family = Family::kU1;
  int p = 0;                 // size or first signature entry
  int q = 0;                 // second signature entry (su, so)
  std::string exceptional;   // "E6(-26)", "G2(2)", "F4(-52)", ...
  std::string suffix;        // "_L" / "_S" root-length marker, or empty

  bool operator==(const LieTerm&) const = default;
};

// Parses "so(5,3)+u(1)", "sl(3,C)_R+sl(2,R)", "E6(-26)", "0" (zero algebra).
// Accepts "⊕" as a separator and the Unicode minus.  Throws kUnknownLabel.
std::vector<LieTerm> parse_lie_label(const std::string& text);

// Canonical term spelling after applying the low-rank isomorphisms
// (su*(4) = so(5,1), sl(4,R) = so(3,3), so(3) = su(2), ...).
LieTerm canonical_term(const LieTerm& t);
std::string term_string(const LieTerm& t);
// Canonical, order-independent spelling of a direct sum (terms sorted).
std::string canonical_label(const std::string& text);
std::string canonical_label(const std::vector<LieTerm>& terms);

long lie_dim(const LieTerm& t);
long lie_dim(const std::string& label);

struct ComplexType {
  std::vector<std::string> simple;  // sorted Dynkin labels, e.g. {"A1","A2","A2"}
  int abelian_rank = 0;
  bool operator==(const ComplexType&) const = default;
  std::string to_string() const;
};

ComplexType complexify(const LieTerm& t);
ComplexType complexify(const std::vector<LieTerm>& terms);
// Normalized Dynkin label for small ranks: B1, C1 → A1; C2 → B2; D3 → A3;
// D2 → A1+A1 (returned as two entries); A0, B0, C0, D1 → nothing.
std::vector<std::string> normalize_dynkin(char family, int rank);

}  // namespace exlie
