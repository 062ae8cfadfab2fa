#ifndef ORESOLVE_FIELD_HPP
#define ORESOLVE_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "oresolve/ratfunc.hpp"

namespace oresolve {

enum class GenKind { Pi, Sigma };

/// One generator of the difference field: either sigma(t) = q_i * t for a
/// distinct parameter q_i (Pi), or sigma(t) = t + beta for a nonzero rational
/// constant beta (Sigma).
struct Generator {
    std::string name;
    GenKind kind;
    std::size_t param_index = 0;  // Pi only
    Rational beta = 0;            // Sigma only
};

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// The supported difference fields: rational, q-rational, multibasic and
/// mixed multibasic.  Parameters are transcendental over Q; the automorphism
/// fixes them and acts on the generators as declared.
class FieldSpec {
  public:
    FieldSpec(std::vector<std::string> params, std::vector<Generator> generators);

    static FieldSpecPtr rational(const std::string& t, const Rational& beta = Rational(1));
    static FieldSpecPtr q_rational(const std::string& q, const std::string& t);
    static FieldSpecPtr multibasic(const std::vector<std::string>& qs,
                                   const std::vector<std::string>& ts);
    static FieldSpecPtr mixed(const std::vector<std::string>& qs,
                              const std::vector<std::string>& ts, const std::string& t,
                              const Rational& beta = Rational(1));

    const VarSetPtr& vars() const { return vars_; }
    std::size_t parameter_count() const { return params_.size(); }
    std::size_t generator_count() const { return gens_.size(); }
    const Generator& generator(std::size_t i) const { return gens_.at(i); }
    GenKind classify(std::size_t gen) const { return gens_.at(gen).kind; }

    /// Variable-table index of generator `i`.
    std::size_t gen_var(std::size_t i) const { return params_.size() + i; }
    /// Variable-table index of parameter `i`.
    std::size_t param_var(std::size_t i) const { return i; }

    /// Header form used by the system file format, e.g. "rational(t)".
    std::string header() const;

  private:
    std::vector<std::string> params_;
    std::vector<Generator> gens_;
    VarSetPtr vars_;
};

/// Apply sigma^k; exact for every integer k.  Sigma generators map to
/// t + k*beta; Pi generators pick up the parameter factor q^k per power
/// (negative k yields Laurent parameter exponents).
MultiPoly apply_sigma(const FieldSpec& field, const MultiPoly& p, long k);
RatFunc apply_sigma(const FieldSpec& field, const RatFunc& r, long k);
std::vector<RatFunc> apply_sigma(const FieldSpec& field, const std::vector<RatFunc>& v, long k);

struct PeriodicSplit {
    MultiPoly periodic;
    MultiPoly aperiodic;
};

/// Periodic/aperiodic split with respect to one generator: for a Sigma
/// generator the periodic part is 1; for a Pi generator it is the maximal
/// power of the generator dividing p.
PeriodicSplit split_periodic(const FieldSpec& field, const MultiPoly& p, std::size_t gen);

/// Aperiodic part with respect to every Pi generator at once.
MultiPoly aperiodic_part_all(const FieldSpec& field, const MultiPoly& p);

}  // namespace oresolve

#endif
