//! Byte-for-byte golden tests for the CLI: the label tables, the
//! classification tables, and the cycle-closure events of the two running
//! examples, plus the sequence and expansion formats.

use cfperm_cli::run;

const EXAMPLE_1: &str = "9 3 7 4 6 11 5 8 10 1 2";
const EXAMPLE_2: &str = "7 1 9 2 5 4 8 6 10 3 11 12 14 13";

fn capture(args: &[&str]) -> (i32, String) {
    let mut buf = Vec::new();
    let code = run(args, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

fn assert_output(args: &[&str], expected: &str) {
    let (code, output) = capture(args);
    assert_eq!(code, 0, "non-zero exit for {args:?}");
    assert_eq!(output, expected, "output mismatch for {args:?}");
}

#[test]
fn golden_fz_label_table_example_1() {
    assert_output(
        &["biject", "fz", "--dir", "fwd", EXAMPLE_1, "--json"],
        concat!(
            "{\"bijection\":\"fz\",\"permutation\":\"9 3 7 4 6 11 5 8 10 1 2\",",
            "\"path\":\"U:0 U:1 L2:1 L3:0 U:2 L2:0 D:2 L3:0 L2:1 D:0 D:0\",",
            "\"heights\":[0,1,2,2,2,3,3,2,2,2,1,0],",
            "\"first_table\":{\"positions\":[1,2,3,5,6,9],\"values\":[9,3,7,6,11,10],\"labels\":[0,1,1,2,0,1]},",
            "\"second_table\":{\"positions\":[7,10,11],\"values\":[5,1,2],\"labels\":[2,0,0]},",
            "\"fixed_points\":[4,8]}\n"
        ),
    );
}

#[test]
fn golden_fz_label_table_example_1_text() {
    assert_output(
        &["biject", "fz", "--dir", "fwd", EXAMPLE_1],
        "path: U:0 U:1 L2:1 L3:0 U:2 L2:0 D:2 L3:0 L2:1 D:0 D:0\n\
         F positions: 1 2 3 5 6 9\n\
         F values: 9 3 7 6 11 10\n\
         F labels: 0 1 1 2 0 1\n\
         G positions: 7 10 11\n\
         G values: 5 1 2\n\
         G labels: 2 0 0\n",
    );
}

#[test]
fn golden_ds_label_table_example_2() {
    assert_output(
        &["biject", "ds", "--dir", "fwd", EXAMPLE_2, "--json"],
        concat!(
            "{\"bijection\":\"ds\",\"permutation\":\"7 1 9 2 5 4 8 6 10 3 11 12 14 13\",",
            "\"path\":\"U:0 U:0 U:0 U:0 D:2 U:1 D:1 D:1 D:0 D:0 D:0 U:0 U:0 D:0\",",
            "\"heights\":[0,1,2,3,4,3,4,3,2,1,0,-1,0,1,0],",
            "\"first_table\":{\"positions\":[2,4,6,8,10,12,14],\"values\":[1,2,4,6,3,12,13],\"labels\":[0,0,1,1,0,0,0]},",
            "\"second_table\":{\"positions\":[1,3,5,7,9,11,13],\"values\":[7,9,5,8,10,11,14],\"labels\":[0,0,2,1,0,0,0]},",
            "\"fixed_points\":[5,11,12]}\n"
        ),
    );
}

#[test]
fn golden_ds_variant_label_table_example_2() {
    // Same table rows as the plain DS bijection, but the labels are
    // attached to values: column i shows the label of σ(i).
    assert_output(
        &["biject", "dsv", "--dir", "fwd", EXAMPLE_2, "--json"],
        concat!(
            "{\"bijection\":\"dsv\",\"permutation\":\"7 1 9 2 5 4 8 6 10 3 11 12 14 13\",",
            "\"path\":\"U:0 U:0 U:0 U:1 D:2 U:1 D:0 D:1 D:0 D:0 D:0 U:0 U:0 D:0\",",
            "\"heights\":[0,1,2,3,4,3,4,3,2,1,0,-1,0,1,0],",
            "\"first_table\":{\"positions\":[2,4,6,8,10,12,14],\"values\":[1,2,4,6,3,12,13],\"labels\":[0,0,1,1,0,0,0]},",
            "\"second_table\":{\"positions\":[1,3,5,7,9,11,13],\"values\":[7,9,5,8,10,11,14],\"labels\":[0,0,2,1,0,0,0]},",
            "\"fixed_points\":[5,11,12]}\n"
        ),
    );
}

#[test]
fn golden_fz_history_example_1() {
    // Stage (a): loops at 4, 8; stage (b): 7, 10, 11 increasing; stage
    // (c): 9, 6, 5, 3, 2, 1 decreasing, cycles closed by 2→3 and 1→9.
    assert_output(
        &["history", "fz", EXAMPLE_1, "--json"],
        concat!(
            "[{\"vertex\":4,\"stage\":\"a\",\"edge\":[4,4],\"closes_cycle\":false},",
            "{\"vertex\":8,\"stage\":\"a\",\"edge\":[8,8],\"closes_cycle\":false},",
            "{\"vertex\":7,\"stage\":\"b\",\"edge\":[7,5],\"closes_cycle\":false},",
            "{\"vertex\":10,\"stage\":\"b\",\"edge\":[10,1],\"closes_cycle\":false},",
            "{\"vertex\":11,\"stage\":\"b\",\"edge\":[11,2],\"closes_cycle\":false},",
            "{\"vertex\":9,\"stage\":\"c\",\"edge\":[9,10],\"closes_cycle\":false},",
            "{\"vertex\":6,\"stage\":\"c\",\"edge\":[6,11],\"closes_cycle\":false},",
            "{\"vertex\":5,\"stage\":\"c\",\"edge\":[5,6],\"closes_cycle\":false},",
            "{\"vertex\":3,\"stage\":\"c\",\"edge\":[3,7],\"closes_cycle\":false},",
            "{\"vertex\":2,\"stage\":\"c\",\"edge\":[2,3],\"closes_cycle\":true},",
            "{\"vertex\":1,\"stage\":\"c\",\"edge\":[1,9],\"closes_cycle\":true}]\n"
        ),
    );
}

#[test]
fn golden_ds_history_example_2() {
    // Evens increasing, odds decreasing; cycles closed when inserting
    // 13→14, 3→9 and 1→7.
    assert_output(
        &["history", "ds", EXAMPLE_2, "--json"],
        concat!(
            "[{\"vertex\":2,\"stage\":\"a\",\"edge\":[2,1],\"closes_cycle\":false},",
            "{\"vertex\":4,\"stage\":\"a\",\"edge\":[4,2],\"closes_cycle\":false},",
            "{\"vertex\":6,\"stage\":\"a\",\"edge\":[6,4],\"closes_cycle\":false},",
            "{\"vertex\":8,\"stage\":\"a\",\"edge\":[8,6],\"closes_cycle\":false},",
            "{\"vertex\":10,\"stage\":\"a\",\"edge\":[10,3],\"closes_cycle\":false},",
            "{\"vertex\":12,\"stage\":\"a\",\"edge\":[12,12],\"closes_cycle\":false},",
            "{\"vertex\":14,\"stage\":\"a\",\"edge\":[14,13],\"closes_cycle\":false},",
            "{\"vertex\":13,\"stage\":\"b\",\"edge\":[13,14],\"closes_cycle\":true},",
            "{\"vertex\":11,\"stage\":\"b\",\"edge\":[11,11],\"closes_cycle\":false},",
            "{\"vertex\":9,\"stage\":\"b\",\"edge\":[9,10],\"closes_cycle\":false},",
            "{\"vertex\":7,\"stage\":\"b\",\"edge\":[7,8],\"closes_cycle\":false},",
            "{\"vertex\":5,\"stage\":\"b\",\"edge\":[5,5],\"closes_cycle\":false},",
            "{\"vertex\":3,\"stage\":\"b\",\"edge\":[3,9],\"closes_cycle\":true},",
            "{\"vertex\":1,\"stage\":\"b\",\"edge\":[1,7],\"closes_cycle\":true}]\n"
        ),
    );
}

#[test]
fn golden_ds_variant_history_example_2() {
    // G' increasing, then F' decreasing, edges σ⁻¹(u)→u; cycles closed
    // when inserting 14→13, 10→3 and 2→1.
    assert_output(
        &["history", "dsv", EXAMPLE_2, "--json"],
        concat!(
            "[{\"vertex\":5,\"stage\":\"a\",\"edge\":[5,5],\"closes_cycle\":false},",
            "{\"vertex\":7,\"stage\":\"a\",\"edge\":[1,7],\"closes_cycle\":false},",
            "{\"vertex\":8,\"stage\":\"a\",\"edge\":[7,8],\"closes_cycle\":false},",
            "{\"vertex\":9,\"stage\":\"a\",\"edge\":[3,9],\"closes_cycle\":false},",
            "{\"vertex\":10,\"stage\":\"a\",\"edge\":[9,10],\"closes_cycle\":false},",
            "{\"vertex\":11,\"stage\":\"a\",\"edge\":[11,11],\"closes_cycle\":false},",
            "{\"vertex\":14,\"stage\":\"a\",\"edge\":[13,14],\"closes_cycle\":false},",
            "{\"vertex\":13,\"stage\":\"b\",\"edge\":[14,13],\"closes_cycle\":true},",
            "{\"vertex\":12,\"stage\":\"b\",\"edge\":[12,12],\"closes_cycle\":false},",
            "{\"vertex\":6,\"stage\":\"b\",\"edge\":[8,6],\"closes_cycle\":false},",
            "{\"vertex\":4,\"stage\":\"b\",\"edge\":[6,4],\"closes_cycle\":false},",
            "{\"vertex\":3,\"stage\":\"b\",\"edge\":[10,3],\"closes_cycle\":true},",
            "{\"vertex\":2,\"stage\":\"b\",\"edge\":[4,2],\"closes_cycle\":false},",
            "{\"vertex\":1,\"stage\":\"b\",\"edge\":[2,1],\"closes_cycle\":true}]\n"
        ),
    );
}

#[test]
fn golden_classification_tables() {
    // Record-and-cycle classification of running example 1: the ten
    // categories (2,1,1,2,1,2,0,0,0,2) plus the derived variant table.
    assert_output(
        &["stats", EXAMPLE_1, "--json"],
        concat!(
            "{\"n\":11,\"cpeak\":3,\"cval\":3,\"cdrise\":3,\"cdfall\":0,\"fix\":2,",
            "\"eareccpeak\":2,\"nrcpeak\":1,\"ereccval\":1,\"nrcval\":2,",
            "\"ereccdrise\":1,\"nrcdrise\":2,\"eareccdfall\":0,\"nrcdfall\":0,",
            "\"rar\":0,\"nrfix\":2,",
            "\"ereccpeak_prime\":1,\"nrcpeak_prime\":2,\"eareccval_prime\":2,\"nrcval_prime\":1,",
            "\"ereccdrise_prime\":1,\"nrcdrise_prime\":2,\"eareccdfall_prime\":0,\"nrcdfall_prime\":0,",
            "\"rar_prime\":0,\"nrfix_prime\":2,",
            "\"evenrar\":0,\"oddrar\":0,\"evennrfix\":2,\"oddnrfix\":0,",
            "\"cyc\":4,\"minval\":2,\"maxpeak\":2,\"nminval\":1,\"nmaxpeak\":1,",
            "\"psnest\":4,\"epsnest\":4,\"opsnest\":0,",
            "\"ucrosscval\":0,\"ucrosscdrise\":2,\"lcrosscpeak\":1,\"lcrosscdfall\":0,",
            "\"unestcval\":3,\"unestcdrise\":2,\"lnestcpeak\":2,\"lnestcdfall\":0,",
            "\"ucrosscpeak_prime\":1,\"ucrosscdrise_prime\":1,\"lcrosscval_prime\":1,\"lcrosscdfall_prime\":0,",
            "\"unestcpeak_prime\":2,\"unestcdrise_prime\":3,\"lnestcval_prime\":2,\"lnestcdfall_prime\":0}\n"
        ),
    );
    // Example 2: rar = {11,12}, nrfix = {5}, eareccdfall = {2,4},
    // nrcdfall = {6}, with the parity refinement.
    assert_output(
        &["stats", EXAMPLE_2, "--json"],
        concat!(
            "{\"n\":14,\"cpeak\":3,\"cval\":3,\"cdrise\":2,\"cdfall\":3,\"fix\":3,",
            "\"eareccpeak\":2,\"nrcpeak\":1,\"ereccval\":3,\"nrcval\":0,",
            "\"ereccdrise\":1,\"nrcdrise\":1,\"eareccdfall\":2,\"nrcdfall\":1,",
            "\"rar\":2,\"nrfix\":1,",
            "\"ereccpeak_prime\":2,\"nrcpeak_prime\":1,\"eareccval_prime\":3,\"nrcval_prime\":0,",
            "\"ereccdrise_prime\":2,\"nrcdrise_prime\":0,\"eareccdfall_prime\":1,\"nrcdfall_prime\":2,",
            "\"rar_prime\":2,\"nrfix_prime\":1,",
            "\"evenrar\":1,\"oddrar\":1,\"evennrfix\":0,\"oddnrfix\":1,",
            "\"cyc\":6,\"minval\":3,\"maxpeak\":3,\"nminval\":0,\"nmaxpeak\":0,",
            "\"psnest\":2,\"epsnest\":0,\"opsnest\":2,",
            "\"ucrosscval\":1,\"ucrosscdrise\":0,\"lcrosscpeak\":0,\"lcrosscdfall\":1,",
            "\"unestcval\":0,\"unestcdrise\":1,\"lnestcpeak\":1,\"lnestcdfall\":1,",
            "\"ucrosscpeak_prime\":0,\"ucrosscdrise_prime\":1,\"lcrosscval_prime\":1,\"lcrosscdfall_prime\":0,",
            "\"unestcpeak_prime\":1,\"unestcdrise_prime\":0,\"lnestcval_prime\":0,\"lnestcdfall_prime\":2}\n"
        ),
    );
}

#[test]
fn golden_sequences() {
    assert_output(&["sequence", "genocchi", "-N", "5"], "1 1 3 17 155 2073\n");
    assert_output(
        &["sequence", "genocchi", "-N", "6"],
        "1 1 3 17 155 2073 38227\n",
    );
    assert_output(
        &["sequence", "median", "-N", "6"],
        "1 1 2 8 56 608 9440\n",
    );
    assert_output(
        &["sequence", "median-from-genocchi", "-N", "6"],
        "1 1 2 8 56 608 9440\n",
    );
    assert_output(
        &["sequence", "factorial", "-N", "7"],
        "1 1 2 6 24 120 720 5040\n",
    );
}

#[test]
fn golden_enumerate() {
    assert_output(
        &["enumerate", "4", "--dperm", "all", "--json"],
        "[[1,2,3,4],[1,2,4,3],[2,1,3,4],[2,1,4,3],[3,1,4,2],[3,2,4,1],[4,1,3,2],[4,2,3,1]]\n",
    );
    assert_output(&["enumerate", "4", "--dperm", "cycle"], "3 1 4 2\n");
    assert_output(&["enumerate", "2"], "1 2\n2 1\n");
}

#[test]
fn golden_biject_inverse() {
    assert_output(&["biject", "fz", "--dir", "inv", "L3:0 L3:0 L3:0"], "1 2 3\n");
    assert_output(&["biject", "ds", "--dir", "inv", "D:0 U:0"], "1 2\n");
    assert_output(&["biject", "dsv", "--dir", "inv", "U:0 U:0 D:1 D:0"], "4 1 3 2\n");
    // cycle-form input round trip
    assert_output(
        &["biject", "fz", "--dir", "fwd", "(1,2)"],
        "path: U:0 D:0\nF positions: 1\nF values: 2\nF labels: 0\nG positions: 2\nG values: 1\nG labels: 0\n",
    );
}

#[test]
fn golden_expand() {
    let dir = std::env::temp_dir();
    let path = dir.join("cfperm-golden-sz.coeffs");
    std::fs::write(
        &path,
        "# Sokal-Zeng J-fraction, truncated\n\
         gamma[0]: λ*w[0]\n\
         gamma[1]: x2 + y2 + λ*w[1]\n\
         gamma[2]: x2 + u2 + y2 + v2 + λ*w[2]\n\
         gamma[3]: x2 + 2*u2 + y2 + 2*v2 + λ*w[3]\n\
         beta[1]: λ*x1*y1\n\
         beta[2]: λ*x1*y1 + λ*u1*y1 + x1*y1 + u1*y1\n\
         beta[3]: λ*x1*y1 + 2*λ*u1*y1 + 2*x1*y1 + 4*u1*y1\n",
    )
    .unwrap();
    assert_output(
        &["expand", "--cf", "j", "--coeffs", path.to_str().unwrap(), "-N", "2"],
        "0: 1\n1: λ*w[0]\n2: λ*x1*y1 + λ^2*w[0]^2\n",
    );
    // factorials from the classical S-fraction
    let path = dir.join("cfperm-golden-fact.coeffs");
    std::fs::write(
        &path,
        "alpha[1]: 1\nalpha[2]: 1\nalpha[3]: 2\nalpha[4]: 2\nalpha[5]: 3\nalpha[6]: 3\n",
    )
    .unwrap();
    assert_output(
        &["expand", "--cf", "s", "--coeffs", path.to_str().unwrap(), "-N", "5"],
        "0: 1\n1: 1\n2: 2\n3: 6\n4: 24\n5: 120\n",
    );
}

#[test]
fn golden_verify() {
    let (code, output) = capture(&["verify", "PermMaster", "-n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(output, "PermMaster: pass (n <= 3)\n");
    let (code, output) = capture(&["verify", "DpermDS", "-n", "2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        output,
        "{\"theorem\":\"DpermDS\",\"n_checked\":2,\"pass\":true,\"first_discrepancy\":null}\n"
    );
}

#[test]
fn exit_codes_on_invalid_input() {
    let (code, _) = capture(&["stats", "3 3 1"]);
    assert_eq!(code, 1);
    let (code, _) = capture(&["biject", "fz", "--dir", "inv", "U:5 D:0"]);
    assert_eq!(code, 1);
    let (code, _) = capture(&["verify", "NoSuchTheorem", "-n", "2"]);
    assert_eq!(code, 1);
    let (code, _) = capture(&["enumerate", "3", "--dperm", "all"]);
    assert_eq!(code, 1);
}
