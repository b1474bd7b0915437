//! Curator-supplied introduction years for the trend tables.
//!
//! The source tables give no years. These are approximate public-debut years
//! chosen by the curator, kept apart from the platform data so that they never
//! leak into a capacity computation.

use std::collections::BTreeMap;

pub type YearTable = BTreeMap<String, i32>;

const YEARS: &[(&str, i32)] = &[
    ("Aibo", 1999),
    ("ASIMO", 2000),
    ("Kismet", 2000),
    ("Roomba", 2002),
    ("Packbot", 2002),
    ("RoboSapien", 2004),
    ("Big Dog", 2005),
    ("Little Dog", 2006),
    ("KeepOn", 2007),
    ("nao_as_printed", 2008),
    ("Simon", 2009),
    ("PR2", 2010),
    ("Robonaut2", 2010),
    ("Darwin", 2010),
    ("KR60HA", 2010),
    ("Baxter", 2012),
    ("Cheetah", 2012),
    ("LBR iiwa", 2013),
    ("Khepera IV", 2015),
];

pub fn builtin_years() -> YearTable {
    YEARS.iter().map(|&(n, y)| (n.to_string(), y)).collect()
}
