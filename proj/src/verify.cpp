#include "fixity/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "fixity/actions.hpp"
#include "fixity/error.hpp"
#include "fixity/subgroups.hpp"

namespace fixity {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<ProfileRow> profile_rows(const FixityProfile& p) {
  std::vector<ProfileRow> rows;
  for (const auto& r : p.rows)
    rows.push_back({r.cls.element_order, r.cls.size, r.fix_count, r.fpr});
  return rows;
}

VerificationReport::Verdict to_verdict(TheoremVerdict::Kind k) {
  switch (k) {
    case TheoremVerdict::Kind::PASS: return VerificationReport::Verdict::PASS;
    case TheoremVerdict::Kind::FAIL: return VerificationReport::Verdict::FAIL;
    default: return VerificationReport::Verdict::SKIP;
  }
}

// Restriction of a group that fixes `block` setwise to that block.
PermGroup restrict_to_block(const PermGroup& g,
                            const std::vector<Point>& block) {
  std::vector<Point> position(g.degree(), UINT32_MAX);
  for (std::size_t i = 0; i < block.size(); ++i) position[block[i]] = Point(i);
  std::vector<Perm> gens;
  for (const Perm& p : g.generators()) {
    std::vector<Point> img(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
      Point target = p[block[i]];
      if (position[target] == UINT32_MAX)
        throw InternalError("restrict_to_block: block is not invariant");
      img[i] = position[target];
    }
    gens.emplace_back(std::move(img));
  }
  if (gens.empty()) return PermGroup::trivial(block.size());
  return PermGroup::generated_by(std::move(gens));
}

// Replays the induction on a hypothesis-satisfying action and returns the
// step tree. Each recursion strictly shrinks the degree.
std::unique_ptr<ReductionNode> replay(const PermGroup& action,
                                      const VerifyOptions& opt, int depth) {
  if (depth > 64) throw InternalError("reduction replay: depth overflow");
  auto node = std::make_unique<ReductionNode>();
  node->degree = action.degree();

  if (action.degree() == 1 || action.is_trivial()) {
    node->kind = ReductionNode::Kind::QUASIPRIMITIVE;
    node->rule = "single point or trivial group; nothing to reduce";
    node->ons_tag = "-";
    return node;
  }

  // the point stabilizer is a Sylow 2-subgroup exactly when the degree is odd
  if (action.degree() % 2 == 0) {
    BlockSystem sys = sylow2_overgroup_blocks(action, 0, opt.seed, opt.limits);
    if (sys.is_singletons())
      throw InternalError("replay: even degree with Sylow point stabilizer");
    QuotientAction q = quotient_action(action, sys);
    if (!q.kernel.is_trivial())
      throw InternalError("replay: block action is unfaithful despite trivial 2-core");
    node->kind = ReductionNode::Kind::SYLOW_BLOCKS;
    node->rule =
        "blocks are the orbits of a Sylow 2-overgroup of the stabilizer; "
        "point ratios are bounded by block ratios";
    node->block_count = sys.block_count();
    node->block_size = sys.block_size();
    if (q.image.degree() >= action.degree())
      throw InternalError("replay: block quotient did not shrink");
    node->children.push_back(replay(q.image, opt, depth + 1));
    return node;
  }

  // odd degree: find an intransitive minimal normal subgroup if any
  std::vector<PermGroup> minimals = minimal_normal_subgroups(action, opt.limits);
  const PermGroup* intransitive = nullptr;
  for (const PermGroup& n : minimals)
    if (orbits(n).size() != 1) {
      intransitive = &n;
      break;
    }

  if (intransitive) {
    auto orbs = orbits(*intransitive);
    std::vector<std::uint32_t> raw(action.degree());
    for (std::size_t b = 0; b < orbs.size(); ++b)
      for (Point x : orbs[b]) raw[x] = std::uint32_t(b);
    BlockSystem sys = BlockSystem::from_block_of(raw);
    if (!is_invariant(action, sys))
      throw InternalError("replay: orbits of a normal subgroup are not blocks");
    QuotientAction q = quotient_action(action, sys);
    node->kind = ReductionNode::Kind::INTRANSITIVE_MINIMAL_NORMAL;
    node->rule =
        "blocks are the orbits of an intransitive minimal normal subgroup; "
        "the kernel acts faithfully on every block, so the block quotient "
        "and one block restriction cover all elements";
    node->block_count = sys.block_count();
    node->block_size = sys.block_size();
    node->children.push_back(replay(q.image, opt, depth + 1));

    PermGroup on_block = restrict_to_block(q.kernel, sys.blocks[0]);
    if (q.kernel.order().fits_u64() && on_block.order().fits_u64() &&
        q.kernel.order_u64() != on_block.order_u64())
      throw InternalError("replay: kernel is unfaithful on a block");
    node->children.push_back(replay(on_block, opt, depth + 1));
    return node;
  }

  // quasiprimitive leaf
  OnsType t = ons_type(action, opt.limits);
  node->kind = ReductionNode::Kind::QUASIPRIMITIVE;
  node->ons_tag = to_string(t.tag);
  node->socle_factor_count = t.socle_factor_count;
  node->socle_order = t.socle_order.to_string();
  switch (t.tag) {
    case OnsType::Tag::HA:
      node->rule = "affine type: ratios are reciprocals of centralizer "
                   "indexes in the regular abelian socle";
      break;
    case OnsType::Tag::AS:
      node->rule = "almost simple socle";
      break;
    case OnsType::Tag::PA:
      node->rule = "product action over a non-abelian simple factor";
      break;
    default:
      node->rule = "outside the odd-degree trichotomy";
      break;
  }

  if (t.tag == OnsType::Tag::HA && action.degree() <= 2000) {
    // cross-check the affine ratio formula on every class with fixed points
    PermGroup v = socle(action, opt.limits);
    std::vector<Perm> translations = v.elements(opt.limits.max_enumeration);
    ConjugacyClasses cc = ConjugacyClasses::compute(action, opt.limits);
    for (std::size_t i = 1; i < cc.count(); ++i) {
      const Perm& rep = cc.at(i).rep;
      if (rep.fix_count() == 0) continue;
      std::uint64_t commuting = 0;
      for (const Perm& tr : translations)
        if (tr.then(rep) == rep.then(tr)) ++commuting;
      if (Ratio(std::int64_t(rep.fix_count()), std::int64_t(action.degree())) !=
          Ratio(std::int64_t(commuting), std::int64_t(translations.size())))
        throw InternalError("replay: affine fixed-point formula violated");
    }
    node->notes.push_back("affine ratio formula verified on all classes");
  }
  return node;
}

}  // namespace

VerificationReport verify(const PermGroup& action, const std::string& name,
                          const std::string& action_desc,
                          const VerifyOptions& opt) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.name = name;
  rep.action = action_desc;
  rep.degree = action.degree();
  rep.order = action.order().to_string();
  rep.seed = opt.seed;

  try {
    rep.hypotheses.transitive = is_transitive(action);
    if (rep.hypotheses.transitive && action.order().fits_u64()) {
      std::uint64_t stab = action.order_u64() / action.degree();
      rep.hypotheses.stab_2group = (stab & (stab - 1)) == 0;
      // odd degree with a 2-group stabilizer: the stabilizers are Sylow, so
      // the 2-core sits inside the trivial kernel
      if (rep.hypotheses.stab_2group && action.degree() % 2 == 1)
        rep.hypotheses.o2_trivial = true;
      else
        rep.hypotheses.o2_trivial =
            o2(action, opt.seed, opt.limits).is_trivial();
    }

    FixityProfile profile = fixity_profile(action, opt.limits);
    rep.profile = profile_rows(profile);
    rep.mindeg = profile.mindeg;
    rep.fixity = profile.fixity;
    rep.max_fpr = profile.max_fpr;
    rep.argmax_class = profile.argmax_class;

    TheoremVerdict v = theorem_bound_from_profile(
        profile, rep.hypotheses.transitive, rep.hypotheses.stab_2group,
        rep.hypotheses.o2_trivial);
    rep.verdict = to_verdict(v.kind);
    rep.skip_reason = v.skip_reason;
    rep.witness_class = v.witness_class;

    bool hypotheses_hold = rep.hypotheses.transitive &&
                           rep.hypotheses.stab_2group &&
                           rep.hypotheses.o2_trivial;
    if (hypotheses_hold && opt.build_reduction_tree)
      rep.tree = replay(action, opt, 0);
  } catch (const ResourceError& e) {
    rep.truncated = true;
    rep.truncation_reason = e.what();
    rep.verdict = VerificationReport::Verdict::SKIP;
    rep.skip_reason = std::string("resource bound: ") + e.what();
  }

  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

VerificationReport verify_cosets_by_formula(const PermGroup& g,
                                            const ConjugacyClasses& cls,
                                            const PermGroup& h,
                                            const std::string& name,
                                            const VerifyOptions& opt) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.name = name;
  rep.action = "sylow2-cosets (class-intersection route)";
  rep.seed = opt.seed;

  if (!g.order().fits_u64() || !h.order().fits_u64())
    throw ResourceError("verify_cosets_by_formula: orders exceed 64-bit");
  const std::uint64_t degree = g.order_u64() / h.order_u64();
  rep.degree = degree;
  rep.order = g.order().to_string();

  try {
    rep.hypotheses.transitive = true;  // coset actions are transitive
    rep.hypotheses.stab_2group = is_2_group(h);
    PermGroup kernel = core(g, h, opt.limits);
    if (!kernel.is_trivial())
      throw InputError("verify_cosets_by_formula: the action is unfaithful");
    if (rep.hypotheses.stab_2group && degree % 2 == 1)
      rep.hypotheses.o2_trivial = true;  // Sylow stabilizers, trivial core
    else
      rep.hypotheses.o2_trivial = o2(g, opt.seed, opt.limits).is_trivial();

    auto hist = class_histogram(cls, h, opt.limits);
    FixityProfile profile;
    profile.degree = degree;
    for (std::size_t i = 0; i < cls.count(); ++i) {
      FixityProfile::Row row;
      row.cls = cls.at(i);
      // fix count on cosets = degree * |x^G ∩ H| / |x^G|, always integral
      unsigned __int128 num =
          (unsigned __int128)degree * hist[i];
      if (num % cls.at(i).size != 0)
        throw InternalError("verify_cosets_by_formula: non-integral fix count");
      row.fix_count = std::uint64_t(num / cls.at(i).size);
      row.fpr = Ratio(std::int64_t(row.fix_count), std::int64_t(degree));
      profile.rows.push_back(std::move(row));
    }
    for (std::size_t i = 1; i < profile.rows.size(); ++i)
      if (profile.rows[i].fix_count > profile.fixity) {
        profile.fixity = profile.rows[i].fix_count;
        profile.argmax_class = i;
      }
    profile.mindeg = degree - profile.fixity;
    profile.max_fpr =
        Ratio(std::int64_t(profile.fixity), std::int64_t(degree));

    rep.profile = profile_rows(profile);
    rep.mindeg = profile.mindeg;
    rep.fixity = profile.fixity;
    rep.max_fpr = profile.max_fpr;
    rep.argmax_class = profile.argmax_class;

    TheoremVerdict v = theorem_bound_from_profile(
        profile, true, rep.hypotheses.stab_2group, rep.hypotheses.o2_trivial);
    rep.verdict = to_verdict(v.kind);
    rep.skip_reason = v.skip_reason;
    rep.witness_class = v.witness_class;
  } catch (const ResourceError& e) {
    rep.truncated = true;
    rep.truncation_reason = e.what();
    rep.verdict = VerificationReport::Verdict::SKIP;
    rep.skip_reason = std::string("resource bound: ") + e.what();
  }

  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

DescentResult descent(const PermGroup& action, Point omega, Ratio threshold,
                      const VerifyOptions& opt) {
  if (!is_transitive(action)) throw InputError("descent: action is intransitive");
  DescentResult result;
  result.threshold = threshold;

  std::vector<std::string> visited;
  auto seen = [&](const std::string& fp) {
    if (std::find(visited.begin(), visited.end(), fp) != visited.end())
      return true;
    visited.push_back(fp);
    return false;
  };

  // maximum ratio over non-identity elements of the full group acting on
  // the blocks: 1 when the kernel is non-trivial
  auto level_max_fpr = [&](const BlockSystem& sys) {
    QuotientAction q = quotient_action(action, sys);
    if (!q.kernel.is_trivial()) return Ratio(1, 1);
    return fixity_profile(q.image, opt.limits).max_fpr;
  };

  // walk: a node is a block system of the original action; children refine
  // it through the maximal systems of the block-stabilizer acting on the
  // block through omega
  std::function<void(const BlockSystem&, std::size_t)> walk =
      [&](const BlockSystem& sys, std::size_t level) {
        std::string fp = sys.fingerprint();
        if (seen(fp)) return;
        DescentLevel lv;
        lv.level = level;
        lv.fingerprint = fp;
        lv.block_count = sys.block_count();
        if (sys.is_singletons()) {
          lv.max_fpr = fixity_profile(action, opt.limits).max_fpr;
          lv.surviving = threshold < lv.max_fpr;
          lv.point_action = true;
          result.levels.push_back(lv);
          if (lv.surviving) ++result.surviving_point_actions;
          return;
        }
        lv.max_fpr = level_max_fpr(sys);
        lv.surviving = threshold < lv.max_fpr;
        lv.point_action = false;
        result.levels.push_back(lv);
        if (!lv.surviving) return;  // everything below is certified

        // block stabilizer of the block through omega, acting on that block
        std::vector<Point> block = sys.blocks[sys.block_of[omega]];
        std::vector<Perm> stab_gens;
        {
          // stabilize the block as an extra point of an extended domain
          const std::size_t n = action.degree();
          const std::size_t m = sys.block_count();
          std::vector<Perm> ext;
          for (const Perm& p : action.generators()) {
            std::vector<Point> img(n + m);
            for (Point x = 0; x < n; ++x) img[x] = p[x];
            Perm bi = block_image(p, sys);
            for (std::size_t b = 0; b < m; ++b)
              img[n + b] = Point(n + bi[Point(b)]);
            ext.emplace_back(std::move(img));
          }
          PermGroup extended = PermGroup::generated_by(ext);
          PermGroup stab = extended.pointwise_stabilizer(
              {Point(action.degree() + sys.block_of[omega])});
          for (const Perm& p : stab.generators()) {
            std::vector<Point> img(p.images().begin(),
                                   p.images().begin() + action.degree());
            stab_gens.emplace_back(std::move(img));
          }
        }
        PermGroup block_stab = stab_gens.empty()
                                   ? PermGroup::trivial(action.degree())
                                   : PermGroup::generated_by(stab_gens);
        PermGroup on_block = restrict_to_block(block_stab, block);

        auto finer = maximal_block_systems(on_block);
        if (finer.empty()) {
          // the point stabilizer is maximal here; descend to the points
          walk(BlockSystem::singletons(action.degree()), level + 1);
          return;
        }
        Point local_omega = UINT32_MAX;
        for (std::size_t i = 0; i < block.size(); ++i)
          if (block[i] == omega) local_omega = Point(i);
        for (const BlockSystem& sub : finer) {
          std::vector<Point> seed_block;
          for (Point local : sub.blocks[sub.block_of[local_omega]])
            seed_block.push_back(block[local]);
          walk(block_closure(action, seed_block), level + 1);
        }
      };

  for (const BlockSystem& sys : maximal_block_systems(action)) walk(sys, 0);
  if (result.levels.empty())
    walk(BlockSystem::singletons(action.degree()), 0);  // primitive input

  return result;
}

}  // namespace fixity
