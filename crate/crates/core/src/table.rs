//! The reference count table and its reproduction.

use std::fmt::Write;
use std::time::{Duration, Instant};

use crate::horn::{HornEngine, Mode};
use crate::polytope;
use crate::rootsys::CartanType;
use crate::Error;

/// One published row: inequality counts per mode (dominance and alcove rows
/// included) and the polytope's vertex and facet counts, `None` where unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    pub group: &'static str,
    pub max: u64,
    pub tw: u64,
    pub twbk: u64,
    pub th3: u64,
    pub vertices: Option<u64>,
    pub facets: Option<u64>,
}

const fn row(
    group: &'static str,
    max: u64,
    tw: u64,
    twbk: u64,
    th3: u64,
    vertices: Option<u64>,
    facets: Option<u64>,
) -> ReferenceRow {
    ReferenceRow {
        group,
        max,
        tw,
        twbk,
        th3,
        vertices,
        facets,
    }
}

pub const REFERENCE_TABLE: [ReferenceRow; 13] = [
    row("G2", 103, 82, 79, 48, Some(30), Some(48)),
    row("Sp(4)", 43, 42, 41, 38, Some(13), Some(38)),
    row("Sp(6)", 363, 329, 296, 200, Some(66), Some(200)),
    row("Sp(8)", 4_679, 3_604, 3_130, 1_204, Some(444), Some(1_204)),
    row("Sp(10)", 75_665, 44_211, 38_795, 7_310, Some(3_162), Some(7_310)),
    row("Sp(12)", 1_422_545, 556_383, 500_130, 43_136, Some(20_839), Some(43_136)),
    row("Spin(7)", 378, 322, 289, 191, Some(65), Some(191)),
    row("Spin(8)", 1_434, 1_347, 1_164, 771, Some(137), Some(771)),
    row("Spin(9)", 4_940, 3_231, 2_748, 1_046, Some(385), Some(1_046)),
    row("Spin(10)", 35_590, 27_814, 23_050, 6_538, Some(1_296), Some(6_538)),
    row("Spin(11)", 79_813, 34_152, 28_636, 5_734, Some(2_236), Some(5_734)),
    row("Spin(12)", 889_751, 485_229, 407_856, 47_141, None, None),
    row("Spin(13)", 1_499_669, 356_942, 300_776, 30_753, Some(12_269), Some(30_753)),
];

pub fn reference(t: CartanType) -> Option<&'static ReferenceRow> {
    REFERENCE_TABLE
        .iter()
        .find(|r| r.group.parse::<CartanType>().ok() == Some(t))
}

/// Computed counts for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub group: CartanType,
    pub max: usize,
    pub tw: usize,
    pub twbk: usize,
    pub th3: usize,
    pub vertices: Option<usize>,
    pub facets: Option<usize>,
    pub elapsed: Duration,
}

impl TableRow {
    /// Column names whose value differs from `reference`; unknown entries on
    /// either side are not compared.
    pub fn mismatches(&self, reference: &ReferenceRow) -> Vec<&'static str> {
        let mut out = Vec::new();
        let pairs = [
            ("MAX", Some(self.max), Some(reference.max)),
            ("TW", Some(self.tw), Some(reference.tw)),
            ("TWBK", Some(self.twbk), Some(reference.twbk)),
            ("Th3", Some(self.th3), Some(reference.th3)),
            ("Vertices", self.vertices, reference.vertices),
            ("Facets", self.facets, reference.facets),
        ];
        for (name, a, b) in pairs {
            if let (Some(a), Some(b)) = (a, b) {
                if a as u64 != b {
                    out.push(name);
                }
            }
        }
        out
    }
}

/// Counts every column for `engine`'s group; the polytope columns only when
/// `with_polytope` is set.
pub fn reproduce(engine: &HornEngine, with_polytope: bool) -> Result<TableRow, Error> {
    let start = Instant::now();
    let lists = engine.generate_many(&[Mode::Max, Mode::Tw, Mode::Twbk, Mode::Th3])?;
    let (vertices, facets) = if with_polytope {
        let f = polytope::facets(&lists[3].hrep()?)?;
        let v = polytope::vertices(&f)?;
        (Some(v.len()), Some(f.len()))
    } else {
        (None, None)
    };
    Ok(TableRow {
        group: engine.cartan_type(),
        max: lists[0].len(),
        tw: lists[1].len(),
        twbk: lists[2].len(),
        th3: lists[3].len(),
        vertices,
        facets,
        elapsed: start.elapsed(),
    })
}

fn cell(v: Option<usize>) -> String {
    v.map_or("?".to_string(), |x| x.to_string())
}

/// Renders computed rows and whether they agree with the published ones.
/// TWBK is marked as an interpreted column. Timings are left out so the
/// output is reproducible.
pub fn render(rows: &[TableRow]) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{:<10} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}  {}",
        "Group", "MAX", "TW", "TWBK*", "Th 3", "Vertices", "Facets", "match"
    )
    .unwrap();
    for r in rows {
        let status = match reference(r.group) {
            None => "-".to_string(),
            Some(f) => {
                let m = r.mismatches(f);
                if m.is_empty() {
                    "yes".to_string()
                } else {
                    format!("NO: {}", m.join(","))
                }
            }
        };
        writeln!(
            s,
            "{:<10} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}  {}",
            r.group.group_name(),
            r.max,
            r.tw,
            r.twbk,
            r.th3,
            cell(r.vertices),
            cell(r.facets),
            status
        )
        .unwrap();
    }
    s.push_str("* TWBK: invariant 1, Levi-movable in degree 0 (interpreted column)\n");
    s
}

/// The published table, unknown entries as `?`.
pub fn render_reference() -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{:<10} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "Group", "MAX", "TW", "TWBK", "Th 3", "Vertices", "Facets"
    )
    .unwrap();
    for r in REFERENCE_TABLE {
        let opt = |v: Option<u64>| v.map_or("?".to_string(), |x| x.to_string());
        writeln!(
            s,
            "{:<10} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
            r.group,
            r.max,
            r.tw,
            r.twbk,
            r.th3,
            opt(r.vertices),
            opt(r.facets)
        )
        .unwrap();
    }
    s
}
