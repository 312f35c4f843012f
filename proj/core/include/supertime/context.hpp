#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "supertime/polynomial.hpp"

namespace supertime {

/// One algebra session: the even symbol table, the ordered odd generators and
/// the total-time-derivative tables. Built once, read-only afterwards; values
/// reference it by pointer and may be shared freely between threads.
class Context {
public:
    Context() : vars_(std::make_shared<VarTable>()) {}

    const std::shared_ptr<const VarTable>& vars() const { return cvars_; }

    int add_symbol(const std::string& name) { return vars_->add(name); }
    int symbol(const std::string& name) const { return vars_->require(name); }
    int find_symbol(const std::string& name) const { return vars_->find(name); }

    int add_generator(const std::string& name);
    int generator(const std::string& name) const;
    int find_generator(const std::string& name) const;
    int generator_count() const { return static_cast<int>(gen_names_.size()); }
    const std::string& generator_name(int id) const { return gen_names_.at(static_cast<size_t>(id)); }

    /// d(var)/dt for the even table; unset symbols are time-constants.
    void set_time_derivative(int var, Polynomial rate) { dt_even_[var] = std::move(rate); }
    const std::map<int, Polynomial>& time_table() const { return dt_even_; }

    /// d(gen)/dt = another generator (jet prolongation c -> c').
    void set_generator_derivative(int gen, int gen_prime) { dt_odd_[gen] = gen_prime; }
    const std::map<int, int>& generator_time_table() const { return dt_odd_; }

private:
    std::shared_ptr<VarTable> vars_;
    std::shared_ptr<const VarTable> cvars_{vars_};
    std::vector<std::string> gen_names_;
    std::map<std::string, int> gen_index_;
    std::map<int, Polynomial> dt_even_;
    std::map<int, int> dt_odd_;
};

}  // namespace supertime
