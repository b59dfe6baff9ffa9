//! Tallies for families of identities checked instance by instance.

/// One family of identities with the number of instances tried and failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub max_degree: usize,
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub(crate) struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
}

impl Tally {
    pub(crate) fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failures: 0 }
    }

    pub(crate) fn record(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub(crate) fn done(self) -> Check {
        Check { name: self.name, cases: self.cases, failures: self.failures }
    }
}
