#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chowcob/gralg/algebra.hpp"

namespace chowcob {

// Generator images of Q_0..Q_imax and of the total reduced power
// P_t(g) = sum_k P^k(g) t^k.  At p = 2, P^k stands for Sq^{2k}.
class OperationTable {
 public:
  OperationTable(std::string name, AlgebraPtr A, int i_max);

  const std::string& name() const { return name_; }
  const AlgebraPtr& algebra() const { return A_; }
  unsigned p() const { return A_->p(); }
  int i_max() const { return i_max_; }

  void set_Q(int i, const std::string& gen, const Polynomial& img);
  void set_power(const std::string& gen, std::vector<Polynomial> total);
  const Polynomial& Q_image(int i, std::size_t gen) const;
  const std::vector<Polynomial>& power_images(std::size_t gen) const;
  bool has_Q(int i, std::size_t gen) const;
  bool has_power(std::size_t gen) const;

  // degree and identity checks on the stored data
  void validate() const;

  Polynomial parse(const std::string& s) const;

 private:
  std::string name_;
  AlgebraPtr A_;
  int i_max_;
  std::vector<std::vector<std::optional<Polynomial>>> Q_;
  std::vector<std::optional<std::vector<Polynomial>>> P_;
};

Polynomial apply_Q(int i, const Polynomial& f, const OperationTable& T);
Polynomial apply_power(int k, const Polynomial& f, const OperationTable& T);
// Q_0 o ... o (Q_hat omitted) o ... o Q_n; Q_n acts first
Polynomial milnor_composite(int hat, int n, const Polynomial& f, const OperationTable& T);

OperationTable table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const OperationTable& T);

}  // namespace chowcob
