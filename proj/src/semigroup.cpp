#include "modgraph/semigroup.hpp"

#include <algorithm>

#include "modgraph/error.hpp"

namespace modgraph {

namespace {

void require_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::domain, std::string(what) + ": rank mismatch (" +
                                       std::to_string(a) + " vs " +
                                       std::to_string(b) + ")",
                {{"rank-mismatch", what}});
  }
}

}  // namespace

MonoidElement::MonoidElement(std::vector<Coord> coords)
    : coords_(std::move(coords)) {
  for (Coord c : coords_) {
    if (c < 0) {
      throw Error(ErrorKind::domain, "monoid element has a negative coordinate",
                  {{"class-nonneg", "coordinates of N^k are non-negative"}});
    }
  }
}

MonoidElement MonoidElement::zero(std::size_t rank) {
  return MonoidElement(std::vector<Coord>(rank, 0));
}

bool MonoidElement::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Coord c) { return c == 0; });
}

MonoidElement& MonoidElement::operator+=(const MonoidElement& other) {
  require_rank(rank(), other.rank(), "add");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

MonoidElement add(const MonoidElement& a, const MonoidElement& b) {
  return a + b;
}

bool divides(const MonoidElement& a, const MonoidElement& b) {
  require_rank(a.rank(), b.rank(), "divides");
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string to_string(const MonoidElement& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

MonoidHom::MonoidHom(std::size_t source_rank,
                     std::vector<std::vector<Coord>> rows)
    : source_rank_(source_rank), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != source_rank_) {
      throw Error(ErrorKind::domain, "hom row length differs from source rank",
                  {{"rank-mismatch", "hom rows"}});
    }
    for (Coord c : row) {
      if (c < 0) {
        throw Error(ErrorKind::domain, "hom matrix entry is negative",
                    {{"hom-nonneg", "monoid maps N^k -> N^m are non-negative"}});
      }
    }
  }
}

MonoidHom MonoidHom::identity(std::size_t rank) {
  std::vector<std::vector<Coord>> rows(rank, std::vector<Coord>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) rows[i][i] = 1;
  return MonoidHom(rank, std::move(rows));
}

MonoidHom MonoidHom::zero(std::size_t source_rank, std::size_t target_rank) {
  return MonoidHom(source_rank, std::vector<std::vector<Coord>>(
                                    target_rank,
                                    std::vector<Coord>(source_rank, 0)));
}

bool MonoidHom::is_identity() const noexcept {
  return *this == identity(source_rank_);
}

MonoidElement MonoidHom::operator()(const MonoidElement& a) const {
  require_rank(source_rank_, a.rank(), "apply_hom");
  std::vector<Coord> out(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < source_rank_; ++c) out[r] += rows_[r][c] * a[c];
  }
  return MonoidElement(std::move(out));
}

MonoidElement apply_hom(const MonoidHom& h, const MonoidElement& a) {
  return h(a);
}

MonoidHom compose(const MonoidHom& outer, const MonoidHom& inner) {
  require_rank(outer.source_rank(), inner.target_rank(), "compose hom");
  std::vector<std::vector<Coord>> rows(
      outer.target_rank(), std::vector<Coord>(inner.source_rank(), 0));
  for (std::size_t i = 0; i < outer.target_rank(); ++i) {
    for (std::size_t j = 0; j < inner.source_rank(); ++j) {
      for (std::size_t k = 0; k < inner.target_rank(); ++k) {
        rows[i][j] += outer.rows()[i][k] * inner.rows()[k][j];
      }
    }
  }
  return MonoidHom(inner.source_rank(), std::move(rows));
}

Coord LinearForm::operator()(const MonoidElement& a) const {
  require_rank(rank(), a.rank(), "eval_form");
  Coord sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] * a[i];
  return sum;
}

bool LinearForm::is_positive() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Coord c) { return c > 0; });
}

Coord eval_form(const LinearForm& f, const MonoidElement& a) { return f(a); }

std::vector<MonoidElement> elements_below(const MonoidElement& bound) {
  std::vector<MonoidElement> out;
  std::vector<Coord> cur(bound.rank(), 0);
  while (true) {
    out.emplace_back(cur);
    // odometer with the last coordinate fastest gives lexicographic order
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == bound[i - 1]) {
      cur[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

std::vector<ElementPair> enumerate_pair_decompositions(const MonoidElement& b) {
  std::vector<ElementPair> out;
  for (const auto& first : elements_below(b)) {
    std::vector<Coord> rest(b.rank());
    for (std::size_t i = 0; i < b.rank(); ++i) rest[i] = b[i] - first[i];
    out.emplace_back(first, MonoidElement(std::move(rest)));
  }
  return out;
}

std::vector<MonoidElement> elements_of_degree_at_most(const LinearForm& form,
                                                      Coord max_value) {
  if (!form.is_positive()) {
    throw Error(ErrorKind::domain, "degree bound needs a positive form",
                {{"ample-positive", "ample form must be positive"}});
  }
  std::vector<MonoidElement> out;
  if (max_value < 0) return out;
  std::vector<Coord> cur(form.rank(), 0);
  auto recurse = [&](auto&& self, std::size_t i, Coord budget) -> void {
    if (i == cur.size()) {
      out.emplace_back(cur);
      return;
    }
    for (Coord c = 0; c * form.coeffs()[i] <= budget; ++c) {
      cur[i] = c;
      self(self, i + 1, budget - c * form.coeffs()[i]);
    }
    cur[i] = 0;
  };
  recurse(recurse, 0, max_value);
  return out;
}

}  // namespace modgraph
