#include "projcalc/exact/gaussian_rational.hpp"

#include <ostream>

#include "projcalc/errors.hpp"

namespace projcalc::exact {

namespace {

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    const bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && k == 0);
    if (!ok) throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string den = s.substr(slash + 1);
    if (den.empty() || den.find_first_not_of('0') == std::string::npos) {
      throw ParseError("zero or missing denominator in '" + std::string(text) + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("invalid rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class n = o.norm2();
  if (sgn(n) == 0) throw std::domain_error("GaussianRational division by zero");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  std::string out = re_.get_str();
  if (sgn(im_) != 0) {
    out += '+';
    out += im_.get_str();
    out += 'i';
  }
  return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty Gaussian rational");
  if (text.back() != 'i') return {parse_rational(text), 0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that starts the imaginary part.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != '+' && body[k - 1] != '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (body.empty() || body == "+") return {0, 1};
    if (body == "-") return {0, -1};
    return {0, parse_rational(body)};
  }
  const std::string_view re = body.substr(0, split);
  std::string_view im = body.substr(split);
  if (im.front() == '+') im.remove_prefix(1);
  mpq_class im_value;
  if (im.empty()) {
    im_value = 1;
  } else if (im == "-") {
    im_value = -1;
  } else {
    im_value = parse_rational(im);
  }
  return {parse_rational(re), im_value};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace projcalc::exact
