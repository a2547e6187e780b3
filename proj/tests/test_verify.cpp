#include <sstream>

#include "doctest.h"
#include "oversmooth/verify.hpp"

using namespace oversmooth;

TEST_CASE("reduction identities hold bitwise") {
  const VerifyReport report = verify_reductions(7);
  CHECK(report.total() == 3);
  CHECK(report.all_pass());
}

TEST_CASE("lemma1 contraction over a reduced trial count") {
  const VerifyReport report = verify_lemma1(1, 60);
  CHECK(report.total() == 60);
  CHECK(report.all_pass());
}

TEST_CASE("theorem2 depth prediction over a reduced trial count") {
  const VerifyReport report = verify_theorem2(1, 40);
  CHECK(report.total() >= 40);  // two epsilons per eligible trial
  CHECK(report.all_pass());
}

TEST_CASE("theorem1 suite") {
  const VerifyReport report = verify_theorem1(3);
  CHECK(report.all_pass());
}

TEST_CASE("claim1 suite") {
  const VerifyReport report = verify_claim1(1);
  CHECK(report.all_pass());
  // Rank-correlation rows are data, always passing, with a numeric payload.
  int data_rows = 0;
  for (const VerifyCase& c : report.cases) {
    if (c.name.find("rank correlation") != std::string::npos) {
      ++data_rows;
      CHECK(c.detail.find("spearman") != std::string::npos);
    }
  }
  CHECK(data_rows == 3);
}

TEST_CASE("theorem3 chain audit asserts only the guaranteed links") {
  const Theorem3Audit audit = verify_theorem3_chain(1);
  CHECK(audit.report.all_pass());
  CHECK(audit.table.size() == audit.report.cases.size());
  CHECK(audit.table.size() == 19 + 18 + 19 + 9 + 1 + 50);

  bool saw_paper_failure = false;
  for (const AuditRow& row : audit.table) {
    CHECK(row.mohar_holds);
    CHECK(row.cavers_aug_holds);
    if (!row.cavers_paper_holds) saw_paper_failure = true;
  }
  // K2 and the complete graphs drive the paper reading negative.
  CHECK(saw_paper_failure);

  std::ostringstream csv;
  write_audit_table_csv(audit.table, csv);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "graph,n,diameter,d_max,fiedler,mohar_lb,lambda,top_end_eigenvalue,"
        "cavers_paper,cavers_aug,mohar_holds,cavers_paper_holds,"
        "cavers_aug_holds,lambda_link_applicable,lambda_link_holds,"
        "lambda_link_rhs");
}

TEST_CASE("suite dispatch") {
  CHECK(run_verify_suite("reductions", 1).suite == "reductions");
  CHECK_THROWS_AS(run_verify_suite("nope", 1), std::invalid_argument);
  CHECK(verify_suite_names().size() == 6);
}
