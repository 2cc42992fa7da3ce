#pragma once

// Unipotent character rows for the classical types in cross characteristic.
// One record per row: which family it belongs to, the character slot, the
// applicability conditions in disjunctive normal form over a fixed atom
// vocabulary, a label template (partition or symbol, entries are integer
// expressions in n, m, e, r) and the q'-part of the degree in the degree DSL.
//
// Label templates: comma-separated entries; "x^k" repeats x k times and
// "a..b" expands to a, a+1, ..., b. Symbols separate the rows with '|'.

namespace blockdeg {

inline constexpr const char* kUnipotentTableJson = R"json(
{
  "schema": "blockdeg-tables/1",
  "rows": [
    {"id": "A.chi1.1", "type": "A", "slot": 1,
     "conditions": [["e=1", "p|(n-1)"]],
     "label": "2, n-2",
     "degree": "(q^(n)-eps^(n))*(q^(n-3)-eps^(n-3))/((q^(1)-eps^(1))*(q^(2)-1))"},
    {"id": "A.chi1.2", "type": "A", "slot": 1,
     "conditions": [["e=1", "p!|(n-1)"]],
     "label": "1, n-1",
     "degree": "(q^(n-1)-eps^(n-1))/(q^(1)-eps^(1))"},
    {"id": "A.chi1.3", "type": "A", "slot": 1,
     "conditions": [["e!=1", "e!=r+1"], ["p!|(m-1)"]],
     "label": "r+1, m*e-1",
     "degree": "prod(i=m*e+1..n; (q^(i)-eps^(i)))*(q^(m*e-r-1)-eps^(m*e-r-1))/prod(i=1..r+1; (q^(i)-eps^(i)))"},
    {"id": "A.chi1.4", "type": "A", "slot": 1,
     "conditions": [["e!=1", "e=r+1", "p|(m-1)"]],
     "label": "1^(r+1), m*e-1",
     "degree": "prod(i=1..e; (q^(n-i)-eps^(n-i))/(q^(i)-eps^(i)))"},
    {"id": "A.chi2.1", "type": "A", "slot": 2,
     "conditions": [["r<2"]],
     "label": "1^n",
     "degree": "1"},
    {"id": "A.chi2.2", "type": "A", "slot": 2,
     "conditions": [["r>=2", "e!=r+1", "e!=r+2"], ["r>=2", "e!=r+1", "p!|(m-1)"],
                    ["r>=2", "m>=2", "e!=r+2"], ["r>=2", "m>=2", "p!|(m-1)"]],
     "label": "1, r+1, m*e-2",
     "degree": "prod(i=m*e+1..n; (q^(i)-eps^(i)))*(q^(m*e-r-2)-eps^(m*e-r-2))*(q^(m*e-1)-eps^(m*e-1))/((q^(r+2)-eps^(r+2))*(q^(1)-eps^(1))*prod(i=1..r; (q^(i)-eps^(i))))"},
    {"id": "A.chi2.3", "type": "A", "slot": 2,
     "conditions": [["r>=2", "m=1", "e=r+1"]],
     "label": "1, e-1, e-1",
     "degree": "prod(i=e+2..n; (q^(i)-eps^(i)))/prod(i=1..e-2; (q^(i)-eps^(i)))"},
    {"id": "A.chi2.4", "type": "A", "slot": 2,
     "conditions": [["r>=2", "e=r+2", "p|(m-1)"]],
     "label": "1^(r+2), m*e-2",
     "degree": "prod(i=1..e; (q^(n-i)-eps^(n-i))/(q^(i)-eps^(i)))"},

    {"id": "BC.chi1.1", "type": "BC", "slot": 1,
     "conditions": [["side=+1"]],
     "label": "0, r+1 | m*e",
     "degree": "prod(i=m*e+1..n; (q^(2*i)-1))*(q^(m*e-r-1)+1)*(q^(m*e)+1)*(q^(r+1)-1)/prod(i=1..r+1; (q^(2*i)-1))"},
    {"id": "BC.chi1.2", "type": "BC", "slot": 1,
     "conditions": [["side=-1", "m odd"]],
     "label": "0, m*e | r+1",
     "degree": "prod(i=m*e+1..n; (q^(2*i)-1))*(q^(m*e-r-1)+1)*(q^(m*e)-1)*(q^(r+1)+1)/prod(i=1..r+1; (q^(2*i)-1))"},
    {"id": "BC.chi1.3", "type": "BC", "slot": 1,
     "conditions": [["side=-1", "m even"]],
     "label": "r+1, m*e | 0",
     "degree": "prod(i=m*e+1..n; (q^(2*i)-1))*(q^(m*e-r-1)-1)*(q^(m*e)+1)*(q^(r+1)+1)/prod(i=1..r+1; (q^(2*i)-1))"},
    {"id": "BC.chi2.1", "type": "BC", "slot": 2,
     "conditions": [["e|n"]],
     "label": "0..n | 1..n",
     "degree": "1"},
    {"id": "BC.chi2.2", "type": "BC", "slot": 2,
     "conditions": [["side=+1", "e!|n", "e!=r+1"], ["side=+1", "e!|n", "p!|(m-1)"]],
     "label": "r+1, m*e | 0",
     "degree": "prod(i=m*e+1..n; (q^(2*i)-1))*(q^(m*e-r-1)-1)*(q^(m*e)+1)*(q^(r+1)+1)/prod(i=1..r+1; (q^(2*i)-1))"},
    {"id": "BC.chi2.3", "type": "BC", "slot": 2,
     "conditions": [["side=+1", "e!|n", "e=r+1", "p|(m-1)"]],
     "label": "0, m*e | e",
     "degree": "prod(i=m*e+1..n; (q^(2*i)-1))*(q^(m*e-e)+1)*(q^(m*e)-1)*(q^(e)+1)/prod(i=1..e; (q^(2*i)-1))"},
    {"id": "BC.chi2.4", "type": "BC", "slot": 2,
     "conditions": [["side=-1", "e!|n", "m odd"]],
     "label": "0, 1, m*e | 1, r+2",
     "degree": "prod(i=m*e+1..n; (q^(2*i)-1))*(q^(m*e-r-2)+1)*(q^(2*(m*e-1))-1)*(q^(m*e)-1)/((q^(2)-1)^2*prod(i=1..r; (q^(2*i)-1))*(q^(r+2)-1))"},
    {"id": "BC.chi2.5", "type": "BC", "slot": 2,
     "conditions": [["side=-1", "e!|n", "m even"]],
     "label": "1, r+2, m*e | 0, 1",
     "degree": "prod(i=m*e+1..n; (q^(2*i)-1))*(q^(m*e-r-2)-1)*(q^(2*(m*e-1))-1)*(q^(m*e)+1)/((q^(2)-1)^2*prod(i=1..r; (q^(2*i)-1))*(q^(r+2)-1))"},

    {"id": "D.chi1.1", "type": "D", "slot": 1,
     "conditions": [["e!|n"]],
     "label": "m*e | r",
     "degree": "prod(i=m*e+1..n-1; (q^(2*i)-1))*(q^(n)-1)*(q^(m*e-r)+1)/prod(i=1..r; (q^(2*i)-1))"},
    {"id": "D.chi1.2", "type": "D", "slot": 1,
     "conditions": [["side=+1", "e|n"], ["side=-1", "e|n", "m even"], ["e|(n-1)"]],
     "label": "0..n-1 | 1..n",
     "degree": "1"},
    {"id": "D.chi1.3", "type": "D", "slot": 1,
     "conditions": [["side=-1", "e!=1", "e|n", "m odd"]],
     "label": "1, n-e | 0, e+1",
     "degree": "prod(i=n-e+1..n-1; (q^(2*i)-1))*(q^(n)-1)*(q^(n-2*e-1)+1)*(q^(n-e)+1)*(q^(n-e-1)-1)/((q^(1)-1)*prod(i=1..e-1; (q^(2*i)-1))*(q^(e)-1)*(q^(e+1)+1))"},
    {"id": "D.chi2.1", "type": "D", "slot": 2,
     "conditions": [["side=+1", "e!|n"]],
     "label": "1, m*e | 0, r+1",
     "degree": "prod(i=m*e+1..n-1; (q^(2*i)-1))*(q^(n)-1)*(q^(m*e-r-1)+1)*(q^(m*e)+1)*(q^(m*e-1)-1)/(prod(i=1..r-1; (q^(2*i)-1))*(q^(r)-1)*(q^(r+1)+1)*(q^(1)-1))"},
    {"id": "D.chi2.2", "type": "D", "slot": 2,
     "conditions": [["e|n", "e!=1", "side=+1"], ["e|n", "e!=1", "m even"],
                    ["e|n", "p!|(n-1)", "side=+1"], ["e|n", "p!|(n-1)", "m even"]],
     "label": "1, n | 0, 1",
     "degree": "(q^(2*(n-1))-1)/(q^(2)-1)"},
    {"id": "D.chi2.3", "type": "D", "slot": 2,
     "conditions": [["e=1", "p|(n-1)"]],
     "label": "n-1 | 1",
     "degree": "(q^(n)-1)*(q^(n-2)+1)/(q^(2)-1)"},
    {"id": "D.chi2.4", "type": "D", "slot": 2,
     "conditions": [["side=-1", "e!|n", "m even"]],
     "label": "r+1, m*e | 0, 1",
     "degree": "prod(i=m*e+1..n-1; (q^(2*i)-1))*(q^(n)-1)*(q^(m*e-r-1)-1)*(q^(m*e)+1)*(q^(m*e-1)+1)/(prod(i=1..r-1; (q^(2*i)-1))*(q^(r)-1)*(q^(r+1)-1)*(q^(1)+1))"},
    {"id": "D.chi2.5", "type": "D", "slot": 2,
     "conditions": [["side=-1", "e!|n", "m odd"]],
     "label": "0, m*e | 1, r+1",
     "degree": "prod(i=m*e+1..n-1; (q^(2*i)-1))*(q^(n)-1)*(q^(m*e-r-1)+1)*(q^(m*e)-1)*(q^(m*e-1)+1)/(prod(i=1..r-1; (q^(2*i)-1))*(q^(r)+1)*(q^(r+1)-1)*(q^(1)-1))"},
    {"id": "D.chi2.6", "type": "D", "slot": 2,
     "conditions": [["side=-1", "e|n", "m odd", "p!|(m-2)"]],
     "label": "n-e | e",
     "degree": "prod(i=m*e-e+1..m*e-1; (q^(2*i)-1))*(q^(m*e)-1)*(q^(m*e-2*e)+1)/prod(i=1..e; (q^(2*i)-1))"},
    {"id": "D.chi2.7", "type": "D", "slot": 2,
     "conditions": [["side=-1", "e|n", "m odd", "p!|(m-1)"]],
     "label": "1, n-e+1 | 0, e",
     "degree": "prod(i=n-e+2..n-1; (q^(2*i)-1))*(q^(n)-1)*(q^(n-2*e+1)+1)*(q^(n-e+1)+1)*(q^(n-e)-1)/((q^(1)-1)*prod(i=1..e-2; (q^(2*i)-1))*(q^(e-1)-1)*(q^(e)+1))"},

    {"id": "2D.chi1.1", "type": "2D", "slot": 1,
     "conditions": [["e!|n"]],
     "label": "r, m*e |",
     "degree": "prod(i=m*e+1..n-1; (q^(2*i)-1))*(q^(n)+1)*(q^(m*e-r)-1)/prod(i=1..r; (q^(2*i)-1))"},
    {"id": "2D.chi1.2", "type": "2D", "slot": 1,
     "conditions": [["side=-1", "e!=1", "e|n", "m odd"], ["e=1", "p!|(n-1)"]],
     "label": "0, 1, n | 1",
     "degree": "(q^(2*(n-1))-1)/(q^(2)-1)"},
    {"id": "2D.chi1.3", "type": "2D", "slot": 1,
     "conditions": [["e=1", "p|(n-1)"]],
     "label": "1, n-1 |",
     "degree": "(q^(n)+1)*(q^(n-2)-1)/(q^(2)-1)"},
    {"id": "2D.chi1.4", "type": "2D", "slot": 1,
     "conditions": [["side=-1", "e!=1", "e|n", "m even"]],
     "label": "0, 1, n-e | e+1",
     "degree": "prod(i=n-e+1..n-1; (q^(2*i)-1))*(q^(n)+1)*(q^(n-2*e-1)+1)*(q^(n-e)-1)*(q^(n-e-1)-1)/((q^(1)+1)*prod(i=1..e-1; (q^(2*i)-1))*(q^(e)-1)*(q^(e+1)-1))"},
    {"id": "2D.chi1.5", "type": "2D", "slot": 1,
     "conditions": [["side=+1", "e!=1", "e|n"]],
     "label": "1, e+1, n-e | 0",
     "degree": "prod(i=n-e+1..n-1; (q^(2*i)-1))*(q^(n)+1)*(q^(n-2*e-1)-1)*(q^(n-e)+1)*(q^(n-e-1)-1)/((q^(1)-1)*prod(i=1..e-1; (q^(2*i)-1))*(q^(e)+1)*(q^(e+1)-1))"},
    {"id": "2D.chi2.1", "type": "2D", "slot": 2,
     "conditions": [["side=+1", "e!|n"]],
     "label": "0, 1, r+1 | m*e",
     "degree": "prod(i=m*e+1..n-1; (q^(2*i)-1))*(q^(n)+1)*(q^(m*e-r-1)+1)*(q^(m*e)+1)*(q^(m*e-1)+1)/(prod(i=1..r-1; (q^(2*i)-1))*(q^(r)+1)*(q^(r+1)+1)*(q^(1)+1))"},
    {"id": "2D.chi2.2", "type": "2D", "slot": 2,
     "conditions": [["side=-1", "e!|n", "m even"]],
     "label": "1, r+1, m*e | 0",
     "degree": "prod(i=m*e+1..n-1; (q^(2*i)-1))*(q^(n)+1)*(q^(m*e-r-1)-1)*(q^(m*e)+1)*(q^(m*e-1)-1)/(prod(i=1..r-1; (q^(2*i)-1))*(q^(r)+1)*(q^(r+1)-1)*(q^(1)-1))"},
    {"id": "2D.chi2.3", "type": "2D", "slot": 2,
     "conditions": [["side=-1", "e!|n", "m odd"]],
     "label": "0, 1, m*e | r+1",
     "degree": "prod(i=m*e+1..n-1; (q^(2*i)-1))*(q^(n)+1)*(q^(m*e-r-1)+1)*(q^(m*e)-1)*(q^(m*e-1)-1)/(prod(i=1..r-1; (q^(2*i)-1))*(q^(r)-1)*(q^(r+1)-1)*(q^(1)+1))"},
    {"id": "2D.chi2.4", "type": "2D", "slot": 2,
     "conditions": [["side=-1", "e|n", "m odd"], ["e|(n-1)"]],
     "label": "0..n | 1..n-1",
     "degree": "1"},
    {"id": "2D.chi2.5", "type": "2D", "slot": 2,
     "conditions": [["side=-1", "e!=1", "e|n", "m even"]],
     "label": "0, e+1, n-e | 1",
     "degree": "prod(i=n-e+1..n-1; (q^(2*i)-1))*(q^(n)+1)*(q^(n-2*e-1)-1)*(q^(n-e)-1)*(q^(n-e-1)+1)/((q^(1)-1)*prod(i=1..e-1; (q^(2*i)-1))*(q^(e)-1)*(q^(e+1)+1))"},
    {"id": "2D.chi2.6", "type": "2D", "slot": 2,
     "conditions": [["side=+1", "e!=1", "e|n", "p!|(m-2)"]],
     "label": "e, n-e |",
     "degree": "prod(i=n-e+1..n-1; (q^(2*i)-1))*(q^(n)+1)*(q^(n-2*e)-1)/prod(i=1..e; (q^(2*i)-1))"},
    {"id": "2D.chi2.7", "type": "2D", "slot": 2,
     "conditions": [["side=+1", "e!=1", "e|n", "p!|(m-1)"]],
     "label": "0, 1, n-e+1 | e",
     "degree": "prod(i=n-e+2..n-1; (q^(2*i)-1))*(q^(n)+1)*(q^(n-2*e+1)+1)*(q^(n-e+1)-1)*(q^(n-e)-1)/((q^(1)+1)*prod(i=1..e-2; (q^(2*i)-1))*(q^(e-1)-1)*(q^(e)-1))"}
  ],
  "exceptions": [
    {"id": "D4.chi1", "family": "D4special", "slot": 1,
     "conditions": [[]],
     "label": "0, 1, 2, 3 | 1, 2, 3, 4",
     "degree": "q^(12)"},
    {"id": "D4.chi2.1", "family": "D4special", "slot": 2,
     "conditions": [["e=1"], ["e!|n"]],
     "label": "3 | 1",
     "degree": "q*(q^(2)+1)^2"},
    {"id": "D4.chi2.2", "family": "D4special", "slot": 2,
     "conditions": [["e!=1", "e|n"]],
     "label": "1, 3 | 0, 2",
     "degree": "1/2*q^(3)*(q+1)^3*(q^(3)+1)"},
    {"id": "B2even.chi1.1", "family": "Sp4evenQ", "slot": 1,
     "conditions": [["e=1", "side=+1"]],
     "label": "0, 2 | 1",
     "degree": "1/2*(q+1)^2"},
    {"id": "B2even.chi1.2", "family": "Sp4evenQ", "slot": 1,
     "conditions": [["e!=1"], ["side=-1"]],
     "label": "0, 1, 2 |",
     "degree": "1/2*(q-1)^2"},
    {"id": "PSL2.semisimple", "family": "PSL2", "slot": 2,
     "conditions": [[]],
     "label": "",
     "degree": "(q^(1)-eps^(1))"},
    {"id": "PSL3.semisimple", "family": "PSL3eps", "slot": 2,
     "conditions": [[]],
     "label": "",
     "degree": "(q^(3)-eps^(3))"},
    {"id": "A3.chi1", "family": "SmallA3", "slot": 1,
     "conditions": [[]],
     "label": "2, 1",
     "degree": "q*(q^(2)-1)/(q^(1)-eps^(1))"}
  ]
}
)json";

}  // namespace blockdeg
