//! The ambient ring is fixed by an ordered list of variable names.
//! Index 0 is the largest variable in the term order.

/// Ordered, pairwise distinct variable names x_1 > x_2 > ... > x_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    /// Panics on an empty list or duplicate names; callers validating user
    /// input (the parser) report their own positioned errors first.
    pub fn new(names: Vec<String>) -> Self {
        assert!(!names.is_empty(), "variable context needs at least one name");
        for i in 1..names.len() {
            assert!(
                !names[..i].contains(&names[i]),
                "duplicate variable name {}",
                names[i]
            );
        }
        VariableContext { names }
    }

    /// Context named x1, .., xn.
    pub fn numbered(n: usize) -> Self {
        VariableContext::new((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Context of the first `keep` variables, for restrictions x_i -> 0.
    pub fn restricted(&self, keep: usize) -> Self {
        assert!(keep >= 1 && keep <= self.nvars());
        VariableContext::new(self.names[..keep].to_vec())
    }
}
