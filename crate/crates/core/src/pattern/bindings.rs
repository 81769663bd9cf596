use std::collections::{BTreeMap, BTreeSet};

use indexmap::IndexSet;

use super::ast::Variable;
use crate::rdf::RdfTerm;

pub type Row = Box<[Option<RdfTerm>]>;

/// A set of solution mappings over an ordered list of columns. `None`
/// marks an unbound variable. Duplicate rows are never stored.
#[derive(Debug, Clone, Default)]
pub struct BindingTable {
    columns: Vec<Variable>,
    rows: IndexSet<Row>,
}

/// A single solution as a variable-to-term map, unbound variables omitted.
pub type Solution = BTreeMap<Variable, RdfTerm>;

impl BindingTable {
    pub fn new(columns: Vec<Variable>) -> Self {
        let mut seen = IndexSet::new();
        let columns = columns
            .into_iter()
            .filter(|c| seen.insert(c.clone()))
            .collect();
        BindingTable {
            columns,
            rows: IndexSet::new(),
        }
    }

    pub fn columns(&self) -> &[Variable] {
        &self.columns
    }

    pub fn column_index(&self, var: &Variable) -> Option<usize> {
        self.columns.iter().position(|c| c == var)
    }

    /// Adds a row aligned with `columns()`; returns false for a duplicate.
    ///
    /// Panics if the row width differs from the column count.
    pub fn insert(&mut self, row: impl Into<Row>) -> bool {
        let row = row.into();
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match column count"
        );
        self.rows.insert(row)
    }

    /// Adds a row given as variable bindings; variables outside the
    /// columns are ignored.
    pub fn insert_solution(&mut self, solution: &Solution) -> bool {
        let row: Vec<Option<RdfTerm>> = self
            .columns
            .iter()
            .map(|c| solution.get(c).cloned())
            .collect();
        self.insert(row)
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[Option<RdfTerm>]> {
        self.rows.iter().map(|r| &**r)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Value of `var` in `row`, `None` when unbound or not a column.
    pub fn value<'a>(&self, row: &'a [Option<RdfTerm>], var: &Variable) -> Option<&'a RdfTerm> {
        self.column_index(var).and_then(|i| row[i].as_ref())
    }

    /// Restricts to `vars` (in that order), collapsing rows that become equal.
    /// Variables that are not columns come out unbound.
    pub fn project(&self, vars: &[Variable]) -> BindingTable {
        let idx: Vec<Option<usize>> = vars.iter().map(|v| self.column_index(v)).collect();
        let mut out = BindingTable::new(vars.to_vec());
        for row in &self.rows {
            let projected: Vec<Option<RdfTerm>> =
                idx.iter().map(|i| i.and_then(|i| row[i].clone())).collect();
            out.insert(projected);
        }
        out
    }

    pub fn solutions(&self) -> impl Iterator<Item = Solution> + '_ {
        self.rows.iter().map(|row| {
            self.columns
                .iter()
                .zip(row.iter())
                .filter_map(|(c, v)| v.clone().map(|v| (c.clone(), v)))
                .collect()
        })
    }

    /// Rows as a set of solutions, independent of column and row order.
    pub fn solution_set(&self) -> BTreeSet<Solution> {
        self.solutions().collect()
    }

    /// Set equality of solutions, ignoring row and column order.
    pub fn same_solutions(&self, other: &BindingTable) -> bool {
        self.solution_set() == other.solution_set()
    }
}
