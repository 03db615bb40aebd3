// K5 with every label 3 is not planar: chi_orb = 1/6 > 0 forces
// beta_2 > 0, which a planar complex cannot have.

use coxeter_l2::fixtures::k5;
use coxeter_l2::planarity::{verify_certificate, Verdict};
use coxeter_l2::{certify_nonplanar, Certificate};

pub fn run_example() -> Certificate {
    let cert = certify_nonplanar(&k5(3));
    assert_eq!(cert.verdict, Verdict::NotPlanar);
    assert_eq!(verify_certificate(&cert), Ok(true));
    cert
}

fn main() {
    println!("{}", run_example().to_json());
}
