#include "maxent/gaussian.hpp"

#include "maxent/errors.hpp"

namespace maxent {

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return GaussianRational(BigRational::parse(text));

  std::string_view body = text.substr(0, text.size() - 1);
  // The sign that separates real and imaginary parts is the last '+' or '-'
  // not in leading position.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  try {
    if (split == std::string_view::npos) {
      return {BigRational(0), BigRational::parse(body)};
    }
    const BigRational re = BigRational::parse(body.substr(0, split));
    std::string_view im_text = body.substr(split + 1);
    if (im_text.empty() || im_text.front() == '-' || im_text.front() == '+') {
      throw ParseError("malformed imaginary part");
    }
    BigRational im = BigRational::parse(im_text);
    if (body[split] == '-') im = -im;
    return {re, im};
  } catch (const ParseError&) {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return im_.to_string() + "i";
  std::string out = re_.to_string();
  out += im_.sign() < 0 ? '-' : '+';
  out += im_.abs().to_string();
  out += 'i';
  return out;
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
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  BigRational re = re_ * o.re_ - im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const BigRational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

}  // namespace maxent
