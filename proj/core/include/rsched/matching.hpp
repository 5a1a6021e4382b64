#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsched {

enum class Part { A, B, C, APrime, BPrime, CPrime };

struct Element {
  Part part = Part::A;
  int index = 1;  // 1-based

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

std::string to_string(const Element& x);

/// {a_i, b_j, c_k}, 1-based.
struct Triplet {
  int a = 1;
  int b = 1;
  int c = 1;

  friend bool operator==(const Triplet&, const Triplet&) = default;
  friend auto operator<=>(const Triplet&, const Triplet&) = default;
};

struct ThreeDM {
  int n = 0;
  std::vector<Triplet> triplets;

  friend bool operator==(const ThreeDM&, const ThreeDM&) = default;
};

/// Indices in range, no repeated triplet, every element covered.
void validate(const ThreeDM& d);
bool is_covered(const ThreeDM& d);
std::size_t element_degree(const ThreeDM& d, const Element& x);

/// A triplet of the starred variant: three elements from the six sets.
struct StarTriplet {
  Element x;
  Element y;
  Element z;

  friend bool operator==(const StarTriplet&, const StarTriplet&) = default;
};

/// 3-DM* over A, A', B, B', C, C' (each of size 3n). `e1` holds triplets of
/// the form {a_i or a'_i, b_j, c_j}; `e2` is derived from ζ.
struct ThreeDMStar {
  int n = 0;
  std::vector<StarTriplet> e1;
  std::vector<StarTriplet> e2;

  int size() const { return 3 * n; }
  /// E1 followed by E2.
  std::vector<StarTriplet> triplets() const;

  friend bool operator==(const ThreeDMStar&, const ThreeDMStar&) = default;
};

/// ζ(3k+1) = 3k+2, ζ(3k+2) = 3k+3, ζ(3k+3) = 3k+1.
int zeta(int i);

/// Throws ValidationError on a malformed E1 triplet or an uncovered b_j/c_j.
ThreeDMStar build_3dm_star(int n, std::vector<StarTriplet> e1);
std::size_t element_degree(const ThreeDMStar& d, const Element& x);

/// Indices into the instance's triplet list (E1 then E2 for the starred
/// variant), ascending.
struct MatchingCertificate {
  std::vector<std::size_t> chosen;

  friend bool operator==(const MatchingCertificate&, const MatchingCertificate&) = default;
};

bool check_certificate(const ThreeDM& d, const MatchingCertificate& f);
bool check_certificate(const ThreeDMStar& d, const MatchingCertificate& f);

inline constexpr std::size_t kDefaultMatchCap = 30;

/// Exhaustive perfect-cover search, branching on the uncovered element with
/// the fewest live triplets. Throws CapExceeded when |E| > cap.
std::optional<MatchingCertificate> brute_force_match(const ThreeDM& d, std::size_t cap = kDefaultMatchCap);
std::optional<MatchingCertificate> brute_force_match(const ThreeDMStar& d, std::size_t cap = kDefaultMatchCap);

/// The five-triplet instance over n = 3 that has no perfect matching.
ThreeDM counterexample_3dm();

//   3DM <n>       then "triplet a<i> b<j> c<k>"
//   3DMSTAR <n>   then "e1 a<i>|a'<i> b<j> c<j>"
ThreeDM parse_3dm(std::string_view text);
ThreeDMStar parse_3dm_star(std::string_view text);
std::string emit(const ThreeDM& d);
std::string emit(const ThreeDMStar& d);

}  // namespace rsched
