//! CSV rows.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

/// One (configuration, N) cell. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub experiment: String,
    /// Legend label, e.g. `incremental-lie/d_RS/BB`.
    pub config: String,
    pub metric: String,
    pub intersection: String,
    pub build: String,
    pub splitting: String,
    pub m: u64,
    pub queries: u64,
    pub seed: u64,
    pub n: u64,
    pub leaves_mean: f64,
    pub vertices_mean: f64,
    pub dist_evals_mean: f64,
    /// k-d trees never evaluate distances while building, so this is 0.
    pub build_dist_evals: u64,
    pub build_time_us: f64,
    pub query_time_us_mean: f64,
    /// `leaves_mean / N^(1/6)` for Reeds-Shepp rows.
    pub leaves_norm: Option<f64>,
}

pub const HEADER: [&str; 17] = [
    "experiment",
    "config",
    "metric",
    "intersection",
    "build",
    "splitting",
    "m",
    "queries",
    "seed",
    "n",
    "leaves_mean",
    "vertices_mean",
    "dist_evals_mean",
    "build_dist_evals",
    "build_time_us",
    "query_time_us_mean",
    "leaves_norm",
];

/// Writes a header row followed by one row per record.
pub fn write_records<W: Write>(w: W, records: &[BenchRecord]) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    wtr.write_record(HEADER)?;
    for r in records {
        wtr.serialize(r)?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(r: R) -> Result<Vec<BenchRecord>> {
    let mut rdr = csv::Reader::from_reader(r);
    let headers = rdr.headers()?.clone();
    anyhow::ensure!(headers.iter().eq(HEADER), "unexpected CSV header: {:?}", headers);
    rdr.deserialize().map(|r| r.map_err(Into::into)).collect()
}

pub fn write_csv(path: &Path, records: &[BenchRecord]) -> Result<()> {
    let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    write_records(f, records).with_context(|| format!("writing {}", path.display()))
}

pub fn read_csv(path: &Path) -> Result<Vec<BenchRecord>> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_records(f).with_context(|| format!("reading {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sample(n: u64, norm: Option<f64>) -> BenchRecord {
        BenchRecord {
            experiment: "exp2".into(),
            config: "incremental-lie/d_RS/BB".into(),
            metric: "reeds-shepp".into(),
            intersection: "bb".into(),
            build: "incremental".into(),
            splitting: "lie".into(),
            m: 1,
            queries: 1000,
            seed: 7,
            n,
            leaves_mean: 12.345,
            vertices_mean: 0.1 + 0.2,
            dist_evals_mean: 1.0 / 3.0,
            build_dist_evals: 0,
            build_time_us: 1234.5,
            query_time_us_mean: 5.25e-3,
            leaves_norm: norm,
        }
    }

    #[test]
    fn zero_records_is_header_only() {
        let mut buf = vec![];
        write_records(&mut buf, &[]).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s.lines().count(), 1);
        assert_eq!(s.trim_end(), HEADER.join(","));
        assert!(read_records(s.as_bytes()).unwrap().is_empty());
    }

    #[test]
    fn one_record_is_two_lines() {
        let mut buf = vec![];
        write_records(&mut buf, &[sample(1024, None)]).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s.lines().count(), 2);
        // missing normalisation is an empty trailing cell
        assert!(s.lines().nth(1).unwrap().ends_with(','));
    }

    #[test]
    fn round_trip_is_exact() {
        let recs = vec![sample(1024, Some(3.0f64.sqrt())), sample(2048, None), sample(4096, Some(1e-300))];
        let mut buf = vec![];
        write_records(&mut buf, &recs).unwrap();
        assert_eq!(read_records(&buf[..]).unwrap(), recs);
    }

    #[test]
    fn wrong_header_is_rejected() {
        assert!(read_records("a,b\n1,2\n".as_bytes()).is_err());
    }

    #[test]
    fn io_errors_name_the_path() {
        let err = read_csv(Path::new("/nonexistent/dir/x.csv")).unwrap_err();
        assert!(format!("{err:#}").contains("/nonexistent/dir/x.csv"));
    }
}
