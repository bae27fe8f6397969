#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

class UnboundVariableError : public std::runtime_error {
public:
    explicit UnboundVariableError(const std::string& w) : std::runtime_error(w) {}
};

// Ordered variable names: a block of coordinate variables (z_k, m_k, ...)
// followed by a block of parameter variables (d_1..d_n). Exponent vectors of
// monomials are indexed against this table.
class VarTable {
public:
    VarTable() = default;
    VarTable(std::vector<std::string> coords, std::vector<std::string> params)
        : names_(std::move(coords)), n_coords_(static_cast<int>(names_.size())) {
        for (auto& p : params) names_.push_back(p);
        for (int i = 0; i < size(); ++i) {
            if (index_.count(names_[i])) throw std::domain_error("duplicate variable " + names_[i]);
            index_[names_[i]] = i;
        }
    }

    static std::shared_ptr<const VarTable> coords_and_params(const std::string& stem, int ncoords,
                                                             int nparams) {
        std::vector<std::string> cs, ps;
        for (int k = 1; k <= ncoords; ++k) cs.push_back(stem + std::to_string(k));
        for (int k = 1; k <= nparams; ++k) ps.push_back("d" + std::to_string(k));
        return std::make_shared<const VarTable>(std::move(cs), std::move(ps));
    }

    int size() const { return static_cast<int>(names_.size()); }
    int n_coords() const { return n_coords_; }
    int n_params() const { return size() - n_coords_; }
    const std::string& name(int i) const { return names_.at(i); }
    bool is_param(int i) const { return i >= n_coords_; }

    int index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw UnboundVariableError("unbound variable: " + name);
        return it->second;
    }
    bool has(const std::string& name) const { return index_.count(name) != 0; }

    bool operator==(const VarTable& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    int n_coords_ = 0;
    std::map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

}  // namespace flagpoly
