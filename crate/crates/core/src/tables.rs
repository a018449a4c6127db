//! Printed coefficient tables, held as CSV data under `data/`.
//!
//! Each line is `weights,c1,...,cℓ` with space-separated weights. These are
//! only ever compared against; nothing downstream reads them as input.

use std::sync::OnceLock;

use crate::exact_arith::{parse_rational, Rational};
use crate::theta::{QuadForm, Space};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    /// Q1 forms.
    Two,
    /// Q3 forms.
    Three,
    /// Q2 pairs.
    C,
}

impl Table {
    pub const ALL: [Table; 3] = [Table::Two, Table::Three, Table::C];

    pub fn label(self) -> &'static str {
        match self {
            Table::Two => "2",
            Table::Three => "3",
            Table::C => "C",
        }
    }

    pub fn parse_label(s: &str) -> Option<Table> {
        Table::ALL.into_iter().find(|t| t.label().eq_ignore_ascii_case(s.trim()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub table: Table,
    pub space: Space,
    pub form: QuadForm,
    pub coefficients: Vec<Rational>,
}

const SOURCES: &[(Table, Space, &str)] = &[
    (Table::Two, Space::Chi0, include_str!("../data/table2_chi0.csv")),
    (Table::Two, Space::Chi8, include_str!("../data/table2_chi8.csv")),
    (Table::Two, Space::Chi12, include_str!("../data/table2_chi12.csv")),
    (Table::Two, Space::Chi24, include_str!("../data/table2_chi24.csv")),
    (Table::Three, Space::Chi0, include_str!("../data/table3_chi0.csv")),
    (Table::Three, Space::Chi8, include_str!("../data/table3_chi8.csv")),
    (Table::Three, Space::Chi12, include_str!("../data/table3_chi12.csv")),
    (Table::Three, Space::Chi24, include_str!("../data/table3_chi24.csv")),
    (Table::C, Space::Chi0, include_str!("../data/tableC_chi0.csv")),
];

fn parse_source(table: Table, space: Space, text: &str) -> Vec<TableRow> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let mut cells = line.split(',');
            let weights: Vec<u32> = cells
                .next()
                .unwrap_or_default()
                .split_whitespace()
                .map(|w| w.parse().expect("table weights are integers"))
                .collect();
            let form = match (table, weights.as_slice()) {
                (Table::Two, &[a, b, c, d]) => QuadForm::Q1([a, b, c, d]),
                (Table::Three, &[a, b, c]) => QuadForm::Q3([a, b, c]),
                (Table::C, &[a, b]) => QuadForm::Q2([a, b]),
                _ => panic!("malformed table row: {line}"),
            };
            let coefficients: Vec<Rational> = cells
                .map(|c| parse_rational(c).expect("table entries are rationals"))
                .collect();
            assert_eq!(coefficients.len(), space.dimension(), "row width: {line}");
            TableRow {
                table,
                space,
                form,
                coefficients,
            }
        })
        .collect()
}

/// Every printed row, in table order.
pub fn all_rows() -> &'static [TableRow] {
    static ROWS: OnceLock<Vec<TableRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        SOURCES
            .iter()
            .flat_map(|&(t, s, text)| parse_source(t, s, text))
            .collect()
    })
}

/// The printed row for `form`, if the paper has one.
pub fn lookup(form: &QuadForm) -> Option<&'static TableRow> {
    all_rows().iter().find(|r| &r.form == form)
}
