/**
 * @file report.hpp
 * @brief Verification reports and the statement catalog.
 */
#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace chikit {

using Json = nlohmann::ordered_json;

/// Statement ids with the identity each one checks.
inline const std::vector<std::pair<std::string, std::string>>& statement_catalog() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"cone.bridge", "Phi(C_N)(x) = (x_1...x_N) chi_N(x_1..x_N)"},
      {"cone.brion", "Phi(C_m)Phi(C_n) = sum over Sh(m,n) of Phi(C_{m+n})(x_{tau^-1(1)},...)"},
      {"cone.lattice", "enumerated lattice points of C_N lie in the cone and sum to the truncated geometric product"},
      {"ez.co_leibniz", "psi_{m,n} delta = (delta x 1) psi_{m-1,n} + (-1)^m (1 x delta) psi_{m,n-1}"},
      {"ez.coassoc", "(psi_{m,n} x 1) psi_{m+n,r} = (1 x psi_{n,r}) psi_{m,n+r}"},
      {"ez.diagram", "(phi_m x phi_n) psi^simplex_{m,n} = psi^cube_{m,n} phi_{m+n}"},
      {"forms.theta_ez", "pushforward of the pulled back theta_{m+n} along psi^cube equals the product of pulled back theta_m, theta_n"},
      {"forms.theta_pullback", "d_N^* theta_N = (-1)^N chi_N(t) dt_1...dt_N"},
      {"hopf.multiplicativity", "chi(F_sigma . F_tau) = chi(F_sigma) chi(F_tau shifted)"},
      {"hopf.shuffle", "sum over Sh(m,n) of chi_{m+n}(x_{tau^-1(1)},...) = chi_m(x_1..x_m) chi_n(x_{m+1}..x_{m+n})"},
      {"total.assoc", "(a box b) box c = a box (b box c)"},
      {"total.cone_claim", "D P_t(A,B) + (-1)^s P_t(DA,B) + P_t(A,DB) = a_2 box b_2 - a_1 box b_1"},
      {"total.cone_claim_negative", "negative controls: the claim without (-1)^s, and with unsubscripted Xi, must fail"},
      {"total.cone_dsq", "cone differential squares to zero"},
      {"total.constants", "c_{d,N} = (-1)^{N-1} c_{d,N-1} and c_{p+q,m+n} = (-1)^{mn} c_{p,m} c_{q,n}"},
      {"total.dsq", "D^2 = 0, hat-delta^2 = 0 and d hat-delta = hat-delta d on random models"},
      {"total.e1_page", "E1 page: even/odd kernel dimensions, exactness for p >= 1, cohomology Q at p = 0"},
      {"total.hat_box", "D(A hatbox_t B) = (-1)^s (DA) hatbox_t B + A hatbox_t (DB)"},
      {"total.homotopy", "A hatbox_t B - A hatbox_t' B is a cone boundary"},
      {"total.leibniz", "D(a box b) = (-1)^s (Da) box b + a box (Db)"},
  };
  return table;
}

inline std::string describe_statement(const std::string& id) {
  for (const auto& [k, v] : statement_catalog())
    if (k == id) return v;
  return "";
}

struct VerificationReport {
  std::string statement;
  std::string paper_ref;
  Json params = Json::object();
  bool pass = false;
  Json details = Json::object();
  double elapsed_ms = 0;

  VerificationReport() = default;
  VerificationReport(std::string id, Json p)
      : statement(std::move(id)), paper_ref(describe_statement(statement)), params(std::move(p)) {}

  /// Without timing the output is a pure function of the inputs.
  Json to_json(bool with_timing = true) const {
    Json j;
    j["statement"] = statement;
    j["paper_ref"] = paper_ref;
    j["params"] = params;
    j["pass"] = pass;
    j["details"] = details;
    j["elapsed_ms"] = with_timing ? elapsed_ms : 0.0;
    return j;
  }
};

/// Stamps elapsed_ms on the report when it goes out of scope.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace chikit
