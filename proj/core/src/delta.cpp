#include "kummer/delta.hpp"

#include <optional>
#include <utility>

#include "kummer/errors.hpp"

namespace kummer {

DeltaSequence DeltaSequence::constant(Scalar c) {
  DeltaSequence d(Kind::Constant, Scalar(1, c.precision()));
  d.params_.push_back(std::move(c));
  return d;
}

DeltaSequence DeltaSequence::geometric(Scalar q) {
  if (abs(q) > 1L) throw DomainError("geometric ratio must satisfy |q| <= 1");
  DeltaSequence d(Kind::Geometric, Scalar(1, q.precision()));
  d.params_.push_back(std::move(q));
  return d;
}

DeltaSequence DeltaSequence::harmonic(Real::Bits bits) {
  return DeltaSequence(Kind::Harmonic, Scalar(1, bits));
}

DeltaSequence DeltaSequence::table(std::vector<Scalar> values, Scalar fallback) {
  DeltaSequence d(Kind::Table, Scalar(1, fallback.precision()));
  d.params_ = std::move(values);
  d.params_.push_back(std::move(fallback));
  return d;
}

Scalar DeltaSequence::at(long m, const PrecisionContext& ctx) const {
  const Real::Bits bits = ctx.working_bits();
  switch (kind_) {
    case Kind::Constant:
      return scale_ * params_.front();
    case Kind::Geometric:
      return scale_ * pow(params_.front(), m);
    case Kind::Harmonic:
      return scale_ / Scalar(m + 1, bits);
    case Kind::Table: {
      const auto n = static_cast<long>(params_.size()) - 1;
      return scale_ * (m < n ? params_[static_cast<size_t>(m)] : params_.back());
    }
  }
  return Scalar(bits);
}

DeltaSequence DeltaSequence::scaled(const Scalar& c) const {
  DeltaSequence d = *this;
  d.scale_ *= c;
  return d;
}

DeltaSequence DeltaSequence::conjugated() const {
  DeltaSequence d = *this;
  d.scale_ = conj(d.scale_);
  for (Scalar& p : d.params_) p = conj(p);
  return d;
}

bool DeltaSequence::is_constant() const {
  switch (kind_) {
    case Kind::Constant:
      return true;
    case Kind::Geometric:
      return params_.front() == Scalar(1, params_.front().precision()) ||
             params_.front().is_zero();
    case Kind::Harmonic:
      return false;
    case Kind::Table:
      for (const Scalar& p : params_) {
        if (!(p == params_.back())) return false;
      }
      return true;
  }
  return false;
}

std::string DeltaSequence::spec(int digits) const {
  std::string body;
  switch (kind_) {
    case Kind::Constant:
      body = "const:" + to_string(params_.front(), digits);
      break;
    case Kind::Geometric:
      body = "geom:" + to_string(params_.front(), digits);
      break;
    case Kind::Harmonic:
      body = "harmonic";
      break;
    case Kind::Table: {
      body = "table:";
      for (size_t k = 0; k + 1 < params_.size(); ++k) {
        if (k > 0) body += ",";
        body += to_string(params_[k], digits);
      }
      body += ";" + to_string(params_.back(), digits);
      break;
    }
  }
  if (scale_ == Scalar(1, scale_.precision())) return body;
  return to_string(scale_, digits) + "*" + body;
}

DeltaSequence parse_delta_spec(std::string_view text, const PrecisionContext& ctx) {
  const std::string original(text);
  std::optional<Scalar> scale;
  if (const auto star = text.find('*'); star != std::string_view::npos) {
    scale = parse_scalar(text.substr(0, star), ctx);
    text.remove_prefix(star + 1);
  }

  auto finish = [&](DeltaSequence d) { return scale ? d.scaled(*scale) : d; };

  if (text == "harmonic") return finish(DeltaSequence::harmonic(ctx.working_bits()));
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("malformed delta spec '" + original + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (kind == "const") return finish(DeltaSequence::constant(parse_scalar(body, ctx)));
  if (kind == "geom") return finish(DeltaSequence::geometric(parse_scalar(body, ctx)));
  if (kind == "table") {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) {
      throw ParseError("table delta needs an explicit default: table:<v0,v1,...;default>");
    }
    std::vector<Scalar> values;
    std::string_view list = body.substr(0, semi);
    while (!list.empty()) {
      const auto comma = list.find(',');
      values.push_back(parse_scalar(list.substr(0, comma), ctx));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
      if (list.empty()) throw ParseError("trailing comma in table delta '" + original + "'");
    }
    return finish(DeltaSequence::table(std::move(values), parse_scalar(body.substr(semi + 1), ctx)));
  }
  throw ParseError("unknown delta kind in '" + original + "'");
}

}  // namespace kummer
