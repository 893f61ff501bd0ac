#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorentz/ext_real.hpp"

namespace lorentz {

// Finite causal model given by explicit n x n tables over elements 0..n-1.
// Used to desk-check hand-built (or deliberately broken) structures through
// the same audits as the shipped models.
class TableModel {
public:
    using element_type = std::size_t;

    TableModel(std::vector<std::vector<double>> dist, std::vector<std::vector<int>> chron,
               std::vector<std::vector<int>> causal, std::vector<std::vector<double>> tau,
               std::string name = "table")
        : dist_(std::move(dist)),
          chron_(std::move(chron)),
          causal_(std::move(causal)),
          tau_(std::move(tau)),
          name_(std::move(name)) {
        n_ = dist_.size();
        if (n_ == 0) throw std::invalid_argument("TableModel: empty tables");
        auto check = [&](std::size_t rows) {
            if (rows != n_) throw std::invalid_argument("TableModel: tables must be n x n");
        };
        check(chron_.size());
        check(causal_.size());
        check(tau_.size());
        for (std::size_t i = 0; i < n_; ++i) {
            check(dist_[i].size());
            check(chron_[i].size());
            check(causal_[i].size());
            check(tau_[i].size());
        }
    }

    std::size_t size() const { return n_; }
    std::vector<std::size_t> all_elements() const {
        std::vector<std::size_t> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = i;
        return out;
    }

    double dist(std::size_t a, std::size_t b) const { return dist_[a][b]; }
    bool chron(std::size_t a, std::size_t b) const { return chron_[a][b] != 0; }
    bool causal(std::size_t a, std::size_t b) const { return causal_[a][b] != 0; }
    ExtReal tau(std::size_t a, std::size_t b) const { return ExtReal(tau_[a][b]); }

    std::string describe(std::size_t e) const { return "#" + std::to_string(e); }
    std::string label() const { return name_; }

    friend bool operator==(const TableModel& a, const TableModel& b) {
        return a.dist_ == b.dist_ && a.chron_ == b.chron_ && a.causal_ == b.causal_ &&
               a.tau_ == b.tau_;
    }

private:
    std::size_t n_;
    std::vector<std::vector<double>> dist_;
    std::vector<std::vector<int>> chron_;
    std::vector<std::vector<int>> causal_;
    std::vector<std::vector<double>> tau_;
    std::string name_;
};

}  // namespace lorentz
