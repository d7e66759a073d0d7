//! Named verification scenarios, one per acceptance criterion, with a
//! runner that enforces a time budget per scenario.

use std::fmt::Write as _;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use diagmon::Result;

pub mod oracle;
mod scenarios;

pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

/// Check results collected by one scenario.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub checks: usize,
    pub failures: usize,
}

impl Report {
    pub fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
        }
        self.lines.push(format!("  [{}] {}", if ok { "ok" } else { "FAILED" }, what.into()));
    }

    pub fn note(&mut self, what: impl Into<String>) {
        self.lines.push(format!("  {}", what.into()));
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Scenario {
    pub name: &'static str,
    pub criterion: u8,
    pub title: &'static str,
    /// Expected wall-clock bound.
    pub budget: Duration,
    pub run: fn() -> Result<Report>,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const SCENARIOS: &[Scenario] = &[
    Scenario { name: "relations", criterion: 1, title: "hook relations and their Brauer images", budget: secs(1), run: scenarios::relations },
    Scenario { name: "catalan", criterion: 2, title: "Jones counts are Catalan numbers", budget: secs(10), run: scenarios::catalan },
    Scenario { name: "brauer-count", criterion: 3, title: "Brauer counts are double factorials", budget: secs(5), run: scenarios::brauer_count },
    Scenario { name: "associativity", criterion: 4, title: "chip multiplication is associative", budget: secs(10), run: scenarios::associativity },
    Scenario { name: "involutions", criterion: 5, title: "star and rotate are involutive anti-automorphisms", budget: secs(10), run: scenarios::involutions },
    Scenario { name: "fiber-law", criterion: 6, title: "circle bookkeeping on idempotent fibers", budget: secs(5), run: scenarios::fiber_law },
    Scenario { name: "k3-quotient", criterion: 7, title: "K_3/C against B_2^1", budget: secs(1), run: scenarios::k3_quotient },
    Scenario { name: "zimin-fingerprints", criterion: 8, title: "Zimin words evaluated in K_3", budget: secs(1), run: scenarios::zimin_fingerprints },
    Scenario { name: "isoterm", criterion: 9, title: "Zimin words as bounded isoterms of B_2^1", budget: secs(60), run: scenarios::isoterm },
    Scenario { name: "refutation", criterion: 10, title: "identity refutation over K_3 generators", budget: secs(5), run: scenarios::refutation },
    Scenario { name: "embeddings", criterion: 11, title: "padding, doubling and middle insertion", budget: secs(10), run: scenarios::embeddings },
    Scenario { name: "rees-matrix", criterion: 12, title: "Rees matrix semigroups and the classifier", budget: secs(5), run: scenarios::rees_matrix },
    Scenario { name: "cross-oracle", criterion: 13, title: "forget and identity checks against independent paths", budget: secs(30), run: scenarios::cross_oracle },
];

pub fn find(name: &str) -> Option<&'static Scenario> {
    SCENARIOS.iter().find(|s| s.name == name)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
    Timeout,
}

impl Status {
    pub fn word(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
            Status::Timeout => "TIMEOUT",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub scenario: &'static Scenario,
    pub status: Status,
    pub elapsed: Duration,
    pub report: Report,
    pub error: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Headline, detail lines, then the machine-readable summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let s = self.scenario;
        writeln!(
            out,
            "{} {} (criterion {}, {:.2} s): {}",
            self.status.word(),
            s.name,
            s.criterion,
            self.elapsed.as_secs_f64(),
            s.title
        )
        .unwrap();
        for line in &self.report.lines {
            writeln!(out, "{line}").unwrap();
        }
        if let Some(e) = &self.error {
            writeln!(out, "  error: {e}").unwrap();
        }
        writeln!(
            out,
            "summary scenario={} criterion={} status={} elapsed_ms={} checks={} failed={}",
            s.name,
            s.criterion,
            self.status.word().to_lowercase(),
            self.elapsed.as_millis(),
            self.report.checks,
            self.report.failures
        )
        .unwrap();
        out
    }
}

/// Runs one scenario on its own thread and gives up after `limit`. A
/// scenario that finishes late but correctly still passes; the caller
/// decides whether its own budget was met.
pub fn run_scenario(scenario: &'static Scenario, limit: Duration) -> Outcome {
    let start = Instant::now();
    let (tx, rx) = mpsc::channel();
    let run = scenario.run;
    thread::spawn(move || {
        let _ = tx.send(run());
    });
    let (status, report, error) = match rx.recv_timeout(limit) {
        Ok(Ok(report)) => {
            let status = if report.failures == 0 && report.checks > 0 { Status::Pass } else { Status::Fail };
            (status, report, None)
        }
        Ok(Err(e)) => (Status::Error, Report::default(), Some(e.to_string())),
        Err(mpsc::RecvTimeoutError::Timeout) => (
            Status::Timeout,
            Report::default(),
            Some(format!("no result within {} s", limit.as_secs())),
        ),
        Err(mpsc::RecvTimeoutError::Disconnected) => {
            (Status::Error, Report::default(), Some("scenario panicked".into()))
        }
    };
    Outcome {
        scenario,
        status,
        elapsed: start.elapsed(),
        report,
        error,
    }
}

/// Runs the scenarios on up to `jobs` worker threads and returns the
/// outcomes in input order.
pub fn run_many(list: &[&'static Scenario], jobs: usize, limit: Duration) -> Vec<Outcome> {
    let jobs = jobs.clamp(1, list.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<Outcome>> = vec![None; list.len()];
    let (tx, rx) = mpsc::channel();
    thread::scope(|scope| {
        for _ in 0..jobs {
            let tx = tx.clone();
            let next = &next;
            scope.spawn(move || loop {
                let k = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                let Some(&s) = list.get(k) else { break };
                if tx.send((k, run_scenario(s, limit))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        for (k, outcome) in rx {
            slots[k] = Some(outcome);
        }
    });
    slots.into_iter().map(|o| o.expect("every scenario reports")).collect()
}
