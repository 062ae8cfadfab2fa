#ifndef ORESOLVE_VARSET_HPP
#define ORESOLVE_VARSET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oresolve/errors.hpp"

namespace oresolve {

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

/// Ordered variable table shared by all polynomials of one computation.
/// The first `param_count` entries are parameters (units of the coefficient
/// field, Laurent exponents allowed); then come the generators (true
/// polynomial variables).  Working variables appended by `extended` land
/// after the generators and are treated like parameters by the low-level
/// ring operations.
class VarSet {
  public:
    VarSet(std::vector<std::string> params, std::vector<std::string> generators)
        : names_(std::move(params)), param_count_(names_.size()) {
        names_.insert(names_.end(), generators.begin(), generators.end());
        gen_end_ = names_.size();
        validate();
    }

    std::size_t size() const { return names_.size(); }
    std::size_t param_count() const { return param_count_; }
    std::size_t generator_count() const { return gen_end_ - param_count_; }

    bool is_generator(std::size_t i) const { return i >= param_count_ && i < gen_end_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    /// New table with working variables appended after the generators.
    VarSetPtr extended(const std::vector<std::string>& extra) const {
        auto vs = std::make_shared<VarSet>(*this);
        for (const auto& n : extra) {
            if (vs->index_of(n)) throw VariableError("duplicate variable: " + n);
            vs->names_.push_back(n);
        }
        return vs;
    }

    bool same_prefix_of(const VarSet& bigger) const {
        if (size() > bigger.size() || param_count_ != bigger.param_count_) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (names_[i] != bigger.names_[i]) return false;
        return true;
    }

  private:
    void validate() const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw VariableError("empty variable name");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw VariableError("duplicate variable: " + names_[i]);
        }
    }

    std::vector<std::string> names_;
    std::size_t param_count_ = 0;
    std::size_t gen_end_ = 0;
};

inline VarSetPtr make_varset(std::vector<std::string> params, std::vector<std::string> generators) {
    return std::make_shared<VarSet>(std::move(params), std::move(generators));
}

}  // namespace oresolve

#endif
