//! Every library operation paired with a CLI invocation that exercises it.
//! The coverage test runs each entry and expects exit code 0.

/// One operation and the arguments (after the program name) reaching it.
#[derive(Clone, Copy, Debug)]
pub struct OpEntry {
    pub module: &'static str,
    pub op: &'static str,
    pub args: &'static [&'static str],
}

const fn op(module: &'static str, op: &'static str, args: &'static [&'static str]) -> OpEntry {
    OpEntry { module, op, args }
}

pub const MODULES: [&str; 8] = ["combinatorics", "exactalg", "fqsym", "symfam", "posets", "hecke0", "mqsym", "cli"];

pub const REGISTRY: &[OpEntry] = &[
    op("combinatorics", "standardize", &["report", "word", "w:3.1.4.1"]),
    op("combinatorics", "descent_composition", &["report", "word", "3142"]),
    op("combinatorics", "q_shuffle", &["report", "shuffle", "w:1.2", "w:1"]),
    op("combinatorics", "shifted_concat", &["report", "shuffle", "w:2.1", "w:1.2"]),
    op("combinatorics", "order_leq", &["report", "order", "2413", "3412"]),
    op("combinatorics", "descent_class_bounds", &["report", "descent-class", "(2,1,2)"]),
    op("combinatorics", "rsk", &["report", "word", "w:2.3.1.3"]),
    op("combinatorics", "hypoplactic_rsk", &["report", "word", "w:3.1.4.1"]),
    op("combinatorics", "connected_factorization", &["report", "word", "21534"]),
    op("combinatorics", "count_connected", &["report", "series", "connected-filter", "7"]),
    op("combinatorics", "binary_tree_of", &["report", "word", "3142"]),
    op("combinatorics", "enumerate", &["report", "enumerate", "packed", "2"]),
    op("exactalg", "lincomb_ops", &["eval", "2*F[12] - (F[12] + F[21])/3"]),
    op("exactalg", "charpoly", &["report", "charpoly", "T3"]),
    op("exactalg", "series_matrix_inverse", &["report", "ext", "3"]),
    op("exactalg", "series_arith", &["report", "series", "enveloping", "8"]),
    op("fqsym", "product_F", &["eval", "F[12]*F[1]"]),
    op("fqsym", "coproduct_F", &["eval", "coproduct(F[312])"]),
    op("fqsym", "duality_pairing", &["eval", "pair(F[312], G[312])"]),
    op("fqsym", "to_multiplicative_basis", &["eval", "to(F[312], Fup)"]),
    op("fqsym", "primitive_basis_V", &["report", "primitive", "4231"]),
    op("fqsym", "sfact", &["report", "sfact", "(2,3)", "53412"]),
    op("fqsym", "projector_pi", &["eval", "pi(F[231])"]),
    op("fqsym", "q_product", &["eval", "qmul(F[1], F[1])"]),
    op("fqsym", "phi_q", &["eval", "phiq(F[21])"]),
    op("fqsym", "pseudo_convolution_T", &["report", "tn", "3", "--q"]),
    op("fqsym", "gbasis_q_shuffle", &["eval", "gshuffle(G[1], G[1])"]),
    op("fqsym", "graded_series_inverse", &["--max-degree", "3", "eval", "inverse(1 + F[1])"]),
    op("symfam", "qsym_product", &["eval", "F(2,1)*M(1)"]),
    op("symfam", "qsym_q_product", &["eval", "qmul(F(1), F(1))"]),
    op("symfam", "nsym_ops", &["eval", "embed(R(2,1)*R(1))"]),
    op("symfam", "free_schur", &["eval", "St[[1,2],[3]]"]),
    op("symfam", "lr_product", &["eval", "St[[1,2],[3]]*St[[1]]"]),
    op("symfam", "sym_ops", &["eval", "to(h[2]*s[1], m)"]),
    op("symfam", "qs_distribution", &["report", "distribution", "3", "1/2,1/3,1/6"]),
    op("posets", "linear_extensions", &["report", "poset", "n=3; 1<3"]),
    op("posets", "gamma_free", &["eval", "Gamma{n=3; 1<3}"]),
    op("posets", "poset_combine", &["report", "poset-combine", "wedge", "n=1", "n=2; 1<2"]),
    op("posets", "loday_ronco_F", &["report", "trees", "((.,.),.)", "(.,.)"]),
    op("posets", "poset_module", &["report", "module", "Poset{n=3; 1<3}"]),
    op("hecke0", "hecke_multiply", &["eval", "T[213]*T[132]"]),
    op("hecke0", "norton_basis", &["report", "norton", "3"]),
    op("hecke0", "frobenius", &["report", "frobenius", "3"]),
    op("hecke0", "build_module", &["report", "module", "N[2413]"]),
    op("hecke0", "characteristic", &["report", "module", "V[3,2/1]"]),
    op("hecke0", "induction_product", &["report", "induction", "21", "1"]),
    op("hecke0", "radical_series", &["report", "radical", "3"]),
    op("hecke0", "quiver", &["report", "quiver", "4", "--method", "ext1"]),
    op("hecke0", "syzygy_resolution", &["report", "resolve", "S(3,1)", "3"]),
    op("hecke0", "ext_poincare_check", &["--truncation", "4", "report", "ext", "3"]),
    op("mqsym", "ms_product", &["eval", "MS[[2,1],[1,0]] * MS[[3,1]]"]),
    op("mqsym", "ms_coproduct", &["eval", "coproduct(MS[[1,0],[0,1]])"]),
    op("mqsym", "ms_pairing", &["eval", "pair(MS[[1,0],[0,1]], MS[[1,0],[0,1]])"]),
    op("mqsym", "ev_maps", &["eval", "ev(MS[[2,1],[1,0]]) + image(F[21])"]),
    op("mqsym", "row_merge", &["report", "row-merge", "[[1,0],[0,1],[1,1]]", "(2,1)"]),
    op("mqsym", "hilbert_series", &["report", "hilbert", "mqsym", "4", "--method", "double-coset"]),
    op("mqsym", "convolution_fA", &["report", "convolution", "[[2,0,1],[0,2,3]]", "abc . a^4b"]),
    op("mqsym", "convolution_homomorphism_check", &["report", "convolution-check", "2"]),
    op("cli", "cmd_eval", &["--format", "json", "eval", "F[12]*F[1]"]),
    op("cli", "cmd_report", &["--format", "tsv", "report", "cartan", "3"]),
    op("cli", "cmd_verify", &["verify", "conjectures", "--max-degree", "2"]),
];
