#ifndef TREEPERM_LINCOMB_HPP
#define TREEPERM_LINCOMB_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace treeperm {

/// Exact coefficient ring.  All structure constants arising here are
/// integers; no denominators ever appear.
using Int = boost::multiprecision::cpp_int;

/// Ordered pair of basis elements.  LinComb over Tensor houses coproduct
/// outputs.  Ordering follows the combined canonical text.
template <class B>
class Tensor {
public:
  Tensor(B left, B right)
      : left_(std::move(left)),
        right_(std::move(right)),
        text_(left_.text() + " (x) " + right_.text()) {}

  const B& left() const { return left_; }
  const B& right() const { return right_; }
  const std::string& text() const { return text_; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.text_ == b.text_;
  }
  friend bool operator<(const Tensor& a, const Tensor& b) {
    if (a.left_ < b.left_) return true;
    if (b.left_ < a.left_) return false;
    return a.right_ < b.right_;
  }

private:
  B left_;
  B right_;
  std::string text_;
};

/// Finite formal sum of basis elements with nonzero exact integer
/// coefficients.  The empty sum is the zero element.  Terms iterate sorted by
/// the canonical text of the basis element.
template <class B>
class LinComb {
public:
  LinComb() = default;

  static LinComb basis(B b) {
    LinComb x;
    x.terms_.emplace(std::move(b), 1);
    return x;
  }

  static LinComb term(Int c, B b) {
    LinComb x;
    x.add_term(std::move(b), c);
    return x;
  }

  void add_term(const B& b, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) {
    a += b;
    return a;
  }

  LinComb operator-() const { return scaled(-1); }

  friend LinComb operator-(LinComb a, const LinComb& b) {
    a += b.scaled(-1);
    return a;
  }

  LinComb scaled(const Int& c) const {
    LinComb out;
    if (c == 0) return out;
    for (const auto& [b, k] : terms_) out.terms_.emplace(b, k * c);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<B, Int>& terms() const& { return terms_; }
  // rvalues hand the map over so that range-for over f(x).terms() is safe
  std::map<B, Int> terms() && { return std::move(terms_); }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinComb& a, const LinComb& b) {
    return !(a == b);
  }

  /// "c1*B1 + c2*B2" with coefficient 1 elided and negatives carrying a
  /// leading minus; "0" for the zero element.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      if (c == 1) {
        s += b.text();
      } else if (c == -1) {
        s += "-" + b.text();
      } else {
        s += c.str() + "*" + b.text();
      }
    }
    return s;
  }

private:
  std::map<B, Int> terms_;
};

template <class B>
LinComb<B> operator*(const Int& c, const LinComb<B>& x) {
  return x.scaled(c);
}

/// Extends a basis-pair map bilinearly to linear combinations.
template <class B, class F>
auto bilinear_extend(F f) {
  return [f](const LinComb<B>& x, const LinComb<B>& y) {
    decltype(f(x.terms().begin()->first, y.terms().begin()->first)) out;
    for (const auto& [bx, cx] : x.terms()) {
      for (const auto& [by, cy] : y.terms()) {
        out += (cx * cy) * f(bx, by);
      }
    }
    return out;
  };
}

/// Extends a basis map (basis -> LinComb of any basis) linearly.
template <class B, class F>
auto linear_extend(F f) {
  return [f](const LinComb<B>& x) {
    decltype(f(x.terms().begin()->first)) out;
    for (const auto& [b, c] : x.terms()) out += c * f(b);
    return out;
  };
}

/// Linear extension of an integer-valued basis map (a counit).
template <class B, class F>
Int linear_extend_scalar(F f, const LinComb<B>& x) {
  Int out = 0;
  for (const auto& [b, c] : x.terms()) out += c * f(b);
  return out;
}

template <class B>
LinComb<Tensor<B>> swap_tensor(const LinComb<Tensor<B>>& x) {
  LinComb<Tensor<B>> out;
  for (const auto& [t, c] : x.terms())
    out.add_term(Tensor<B>(t.right(), t.left()), c);
  return out;
}

/// B1 (x) B2 as a one-term combination.
template <class B>
LinComb<Tensor<B>> tensor_lift(B left, B right) {
  return LinComb<Tensor<B>>::basis(Tensor<B>(std::move(left), std::move(right)));
}

/// Componentwise product on tensors: applies the basis product to the left
/// factors and to the right factors, then combines.  Used by the bialgebra
/// compatibility law.
template <class B, class F>
auto tensor_componentwise(F basis_product) {
  return [basis_product](const LinComb<Tensor<B>>& x,
                         const LinComb<Tensor<B>>& y) {
    LinComb<Tensor<B>> out;
    for (const auto& [tx, cx] : x.terms()) {
      for (const auto& [ty, cy] : y.terms()) {
        LinComb<B> lefts = basis_product(tx.left(), ty.left());
        LinComb<B> rights = basis_product(tx.right(), ty.right());
        Int c = cx * cy;
        for (const auto& [lb, lc] : lefts.terms()) {
          for (const auto& [rb, rc] : rights.terms()) {
            out.add_term(Tensor<B>(lb, rb), c * lc * rc);
          }
        }
      }
    }
    return out;
  };
}

}  // namespace treeperm

#endif
