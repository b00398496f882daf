#include "mp2/mat2.hpp"

#include <ostream>

namespace mp2 {

Mat2Q::Mat2Q(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c != 1) throw std::domain_error("Mat2Q: determinant must be 1");
}

Mat2Q Mat2Q::w(const Rat& t) {
  if (t == 0) throw std::domain_error("Mat2Q::w: t must be nonzero");
  return Mat2Q(0, t, -Rat(den(t), num(t)), 0);
}

Mat2Q Mat2Q::h(const Rat& t) {
  if (t == 0) throw std::domain_error("Mat2Q::h: t must be nonzero");
  return Mat2Q(t, 0, 0, Rat(den(t), num(t)));
}

Mat2Q operator*(const Mat2Q& m, const Mat2Q& n) {
  return Mat2Q(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
               m.c * n.b + m.d * n.d);
}

std::ostream& operator<<(std::ostream& os, const Mat2Q& m) {
  return os << "[[" << rat_to_string(m.a) << "," << rat_to_string(m.b) << "],["
            << rat_to_string(m.c) << "," << rat_to_string(m.d) << "]]";
}

}  // namespace mp2
