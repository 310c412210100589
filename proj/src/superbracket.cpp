#include "gcsing/superbracket.hpp"

#include <Eigen/LU>

#include <string_view>
#include <vector>

#include "gcsing/errors.hpp"

namespace gcs {

namespace {

// One term of the tableau expansion: three brackets over the letters a..l and
// the lines whose two points sit in different brackets. Each such line is
// antisymmetrised (identity +1, swap -1), so a term with s split lines
// contributes 2^s monomials.
struct TableauTerm {
  int sign;
  std::string_view rows[3];
  std::string_view split_lines[3];
};

constexpr TableauTerm kTableau[] = {
    {+1, {"abcd", "efgi", "hjkl"}, {"gh", "ij", ""}},
    {-1, {"abce", "dfgh", "ijkl"}, {"cd", "ef", ""}},
    {+1, {"abce", "dghi", "fjkl"}, {"cd", "ef", "ij"}},
    {-1, {"abcg", "defi", "hjkl"}, {"cd", "gh", "ij"}},
};

std::vector<BracketMonomial> build_monomials() {
  std::vector<BracketMonomial> out;
  for (const auto& term : kTableau) {
    int n_split = 0;
    while (n_split < 3 && !term.split_lines[n_split].empty()) ++n_split;
    for (int mask = 0; mask < (1 << n_split); ++mask) {
      BracketMonomial mono;
      mono.sign = term.sign;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 4; ++c) {
          char letter = term.rows[r][c];
          for (int s = 0; s < n_split; ++s) {
            if (!(mask & (1 << s))) continue;
            const auto line = term.split_lines[s];
            if (letter == line[0]) {
              letter = line[1];
            } else if (letter == line[1]) {
              letter = line[0];
            }
          }
          mono.brackets[r][c] = static_cast<std::uint8_t>(letter - 'a');
        }
      }
      for (int s = 0; s < n_split; ++s) {
        if (mask & (1 << s)) mono.sign = -mono.sign;
      }
      out.push_back(mono);
    }
  }
  return out;
}

}  // namespace

const HomogeneousPoint& point_of(const SuperbracketInput& input, int index) {
  if (index < 0 || index >= 12) throw Error(ErrorCode::InvalidArgument, "point index out of range");
  const auto& span = input[index / 2];
  return index % 2 == 0 ? span.first : span.second;
}

Mat6 plucker_matrix(const SuperbracketInput& input, double tol) {
  Mat6 m;
  for (int i = 0; i < 6; ++i) {
    m.row(i) = join(input[i].first, input[i].second, tol).coords().transpose();
  }
  return m;
}

double superbracket_det(const SuperbracketInput& input, double tol) {
  return plucker_matrix(input, tol).partialPivLu().determinant();
}

std::span<const BracketMonomial> expansion_monomials() {
  static const std::vector<BracketMonomial> table = build_monomials();
  return table;
}

double superbracket_expand(const SuperbracketInput& input) {
  return superbracket_expand(input, expansion_monomials());
}

double superbracket_expand(const SuperbracketInput& input,
                           std::span<const BracketMonomial> monomials) {
  for (const auto& span : input) join(span.first, span.second);
  double total = 0.0;
  for (const auto& mono : monomials) {
    double product = mono.sign;
    for (const auto& br : mono.brackets) {
      product *= bracket4(point_of(input, br[0]), point_of(input, br[1]),
                          point_of(input, br[2]), point_of(input, br[3]));
      if (product == 0.0) break;
    }
    total += product;
  }
  return total;
}

}  // namespace gcs
